import pytest

import bwquiver as bw


@pytest.fixture(scope="module")
def ex6():
    return bw.load_algebra("ex6")


def test_builtin_algebra(ex6):
    assert ex6.dim == 24
    assert ex6.block_dims == [4, 4, 4, 2, 4, 2, 2, 2]
    assert ex6.special_biserial
    assert ex6.field == "Q"
    assert "ex6" not in ex6.hash  # hash is structural
    assert set(bw.builtin_names()) >= {"ex2", "ex6", "ex7-lambda"}


def test_string_modules(ex6):
    words = bw.enumerate_strings(ex6, 1)
    assert "tau" in words
    M = bw.string_module(ex6, "tau")
    assert M.dim == 2
    r = bw.pdim(M)
    assert r["kind"] == "exact" and r["n"] == 0


def test_syzygy_and_pdim(ex6):
    S3 = bw.simple(ex6, "3")
    O = bw.syzygy(S3)
    assert O.dim == 3
    assert len(bw.decompose_names(O)) == 2
    r = bw.pdim(S3)
    assert r["kind"] == "infinite"


def test_graph_module_and_json(ex6):
    spec = {"tops": [{"name": "t", "vertex": "3"}], "edges": [], "deps": []}
    S = bw.graph_module(ex6, spec, name="top-only")
    assert S.dim == 1
    back = bw.module_from_json(ex6, bw.module_to_json(S))
    assert back.dims == S.dims
    assert bw.is_isomorphic(back, bw.simple(ex6, "3"))
    assert "digraph" in bw.module_dot(bw.string_module(ex6, "tau"))


def test_criterion3_scan(ex6):
    rep = bw.criterion3_scan(
        ex6, ["beta", "chi"], ["alpha", "psi"], n_max=2, max_len=6, band_len=6, cutoff=12
    )
    assert rep["ok"] is True
    assert rep["validation"]["ok"] is True
    assert all(row["pdim"]["n"] == 2 for row in rep["mn"])


def test_one_point_extension():
    L = bw.load_algebra("ex7-lambda")
    ext, cert = bw.one_point_extend(
        L, "vertex 9; arrow chi1: 9 -> 5; arrow chi2: 9 -> 6; rel: beta1.chi1 - beta2.chi2"
    )
    assert cert
    assert ext.dim == 26
    assert ext.canonical_text == bw.load_algebra("ex7-lambda1").canonical_text
    P9 = bw.projective(ext, "9")
    assert P9.dim == 5
    assert bw.restrict_to_base(L, P9).dim == 4


def test_errors(ex6):
    with pytest.raises(bw.CalculusError):
        bw.string_module(ex6, "nonexistent_arrow")
    with pytest.raises(bw.CalculusError):
        bw.load_algebra("no-such-builtin")
