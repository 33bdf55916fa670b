from liwgraph.render import draw, save_png

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def test_save_png(tmp_path, s1, example_bliw):
    for name, a in (("gamma.png", s1.gamma(s1.s.index("x'x"))), ("example.png", example_bliw)):
        path = tmp_path / name
        save_png(a, path, title=name)
        assert path.read_bytes()[:8] == PNG_MAGIC


def test_draw_places_one_label_per_arrow(s2):
    G = s2.gamma(s2.s.index("z'z"))
    ax = draw(G)
    texts = [t.get_text() for t in ax.texts]
    assert sorted(t for t in texts if t in ("z", "z'")) == sorted(x for _, x, _ in G.arrows)
    assert set(G.names) <= set(texts)
