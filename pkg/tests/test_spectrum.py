import pytest

from meanderkit import (
    MeanderType,
    NotFrobeniusError,
    PreconditionError,
    admissible_pairs,
    block_measures,
    classify,
    enumerate_meanders,
    index_naive,
    measure,
    parse_type,
    spectrum,
    spectrum_to_json,
)


def test_admissible_pair_counts():
    assert len(admissible_pairs(parse_type("1|4/2|3"))) == 15
    assert admissible_pairs(parse_type("1/1")) == [(1, 1)]
    assert len(admissible_pairs(parse_type("1|2/3"))) == 7


def test_admissible_pair_count_formula():
    for n in range(1, 10):
        for m in enumerate_meanders(n):
            expected = (sum(a * a for a in m.top) + sum(b * b for b in m.bottom)) // 2
            assert len(admissible_pairs(m)) == expected


def test_measure_examples():
    m = parse_type("1|2/3")
    assert measure(m, 1, 2) == 2
    assert measure(m, 1, 1) == 0
    assert measure(m, 2, 1) == -2
    assert measure(parse_type("1|4/2|3"), 4, 2) == 3


def test_measure_antisymmetric():
    m = parse_type("1|4/2|3")
    for i, j in admissible_pairs(m):
        assert measure(m, i, j) == -measure(m, j, i)


def test_measure_rejects_cycles_and_split_components():
    m = parse_type("2/2")  # one 2-cycle
    with pytest.raises(PreconditionError):
        measure(m, 1, 2)
    m = parse_type("1|1/1|1")  # two isolated vertices
    with pytest.raises(PreconditionError):
        measure(m, 1, 2)


def test_spectrum_golden():
    assert spectrum(parse_type("1|4/2|3")) == {-2: 1, -1: 2, 0: 4, 1: 4, 2: 2, 3: 1}
    assert spectrum(parse_type("1/1")) == {}
    assert spectrum(parse_type("1|2/3")) == {-1: 1, 0: 2, 1: 2, 2: 1}


def test_spectrum_rejects_non_frobenius():
    with pytest.raises(NotFrobeniusError) as exc:
        spectrum(parse_type("3/3"))
    assert exc.value.index == 2
    assert "index 2" in str(exc.value)


def test_spectrum_total_dimension():
    for n in range(1, 11):
        for m in enumerate_meanders(n):
            if index_naive(m) != 0:
                continue
            dims = spectrum(m)
            expected = (sum(a * a for a in m.top) + sum(b * b for b in m.bottom)) // 2 - 1
            assert sum(dims.values()) == expected


def test_classify_golden():
    flags = classify({-2: 1, -1: 2, 0: 4, 1: 4, 2: 2, 3: 1})
    assert (flags.symmetric, flags.unbroken, flags.unimodal, flags.strictly_unimodal) == (
        True,
        True,
        True,
        True,
    )
    flags = classify({0: 1, 1: 1})
    assert (flags.symmetric, flags.unbroken, flags.unimodal, flags.strictly_unimodal) == (
        True,
        True,
        True,
        True,
    )
    flags = classify({-1: 1, 0: 1, 1: 1, 2: 1})
    assert flags.symmetric and flags.unbroken and flags.unimodal
    assert not flags.strictly_unimodal


def test_classify_detects_breaks_and_asymmetry():
    assert not classify({-1: 1, 1: 1, 2: 1}).unbroken
    assert not classify({0: 2, 1: 1}).symmetric
    assert not classify({-1: 3, 0: 1, 1: 1, 2: 3}).unimodal


def test_classify_empty_spectrum():
    flags = classify({})
    assert flags.symmetric and flags.unbroken and flags.unimodal and flags.strictly_unimodal


def test_block_measures_golden():
    ms = block_measures(parse_type("1|4/2|3"), "top", 2)
    assert ms == (-2, -1, 0, 0, 1, 1, 2, 3)
    assert block_measures(parse_type("1|4/2|3"), "top", 1) == ()


def test_block_measures_symmetric_unbroken_small():
    for n in range(1, 10):
        for m in enumerate_meanders(n):
            if index_naive(m) != 0:
                continue
            for side, comp in (("top", m.top), ("bottom", m.bottom)):
                for k in range(1, len(comp) + 1):
                    ms = block_measures(m, side, k)
                    if not ms:
                        continue
                    lo, hi = ms[0], ms[-1]
                    assert hi == 1 - lo
                    counts = {e: ms.count(e) for e in set(ms)}
                    assert all(e in counts for e in range(lo, hi + 1))
                    assert all(counts[e] == counts.get(1 - e) for e in counts)


def test_theorem_nine_small():
    for n in range(1, 11):
        for m in enumerate_meanders(n):
            if index_naive(m) != 0:
                continue
            flags = classify(spectrum(m))
            assert flags.symmetric and flags.unbroken


def test_spectrum_json_shape():
    data = spectrum_to_json(spectrum(parse_type("1|4/2|3")))
    assert data["eigenvalues"][0] == {"e": -2, "dim": 1}
    assert data["symmetric"] is True
    assert data["strictly_unimodal"] is True
