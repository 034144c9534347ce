import numpy as np
import pytest

from domtsim.environments import (Bursty, Drought, FileSource, Stationary,
                                  Stream, TwoPhase, generate, iter_pvalue_file)
from domtsim.sampling import BetaAlt, LinearDetectability, RngState, derive


def _rng(seed=0, rep=0):
    return RngState(derive(seed, rep, 0))


def test_same_key_reproduces_the_stream_bit_for_bit():
    a = generate(Stationary(t=2000), _rng(3))
    b = generate(Stationary(t=2000), _rng(3))
    assert np.array_equal(a.p, b.p)
    assert np.array_equal(a.truth, b.truth)


def test_different_replications_give_different_streams():
    a = generate(Stationary(t=2000), _rng(3, 0))
    b = generate(Stationary(t=2000), _rng(3, 1))
    assert not np.array_equal(a.p, b.p)


def test_stationary_label_rate_is_close_to_nominal():
    s = generate(Stationary(t=20000, pi0=0.8), _rng(4))
    frac = s.truth.mean()
    assert abs(frac - 0.2) < 0.01  # ~3.5 sigma at this n


def test_stationary_alternative_pvalues_concentrate_near_zero():
    s = generate(Stationary(t=20000, pi0=0.8, alt=BetaAlt(0.05, 20.0)), _rng(5))
    alt_p = s.p[s.truth == 1]
    null_p = s.p[s.truth == 0]
    assert alt_p.mean() < 0.02
    assert abs(null_p.mean() - 0.5) < 0.02


def test_pure_null_stream_is_allowed():
    s = generate(Stationary(t=300, pi0=1.0), _rng(6))
    assert s.truth.sum() == 0


def test_bursty_prefix_is_pure_null():
    env = Bursty(t=4000, t0=1500, pi_post=0.2, alt=BetaAlt(0.3, 15.0))
    s = generate(env, _rng(7))
    assert s.truth[:1500].sum() == 0
    post_rate = s.truth[1500:].mean()
    assert abs(post_rate - 0.8) < 0.03
    assert env.rho == pytest.approx(0.375)


def test_bursty_onset_bounds_are_checked():
    with pytest.raises(ValueError):
        Bursty(t=100, t0=100)
    with pytest.raises(ValueError):
        Bursty(t=100, t0=-1)


def test_two_phase_splits_exactly_in_half():
    s = generate(TwoPhase(t=1000, alt=LinearDetectability(5.0)), _rng(8))
    assert s.truth[:500].sum() == 0
    assert s.truth[500:].sum() == 500
    assert s.p[500:].max() <= 0.2 + 1e-12


def test_two_phase_requires_an_even_horizon():
    with pytest.raises(ValueError):
        TwoPhase(t=1001)


def test_drought_window_carries_no_signal():
    env = Drought(t=3000, t0=500, k=1000, pi0=0.7)
    s = generate(env, _rng(9))
    assert s.truth[500:1500].sum() == 0
    assert s.truth[:500].sum() > 0
    assert s.truth[1500:].sum() > 0


def test_drought_geometry_is_validated():
    with pytest.raises(ValueError):
        Drought(t=1000, t0=0, k=10)
    with pytest.raises(ValueError):
        Drought(t=1000, t0=500, k=500)


def test_stream_iterates_as_indexed_items():
    s = Stream(np.array([0.5, 0.1]), np.array([0, 1], dtype=np.int8))
    items = list(s)
    assert [it.t for it in items] == [1, 2]
    assert items[1].truth == 1
    assert len(s) == 2


def test_stream_rejects_mismatched_lengths():
    with pytest.raises(ValueError):
        Stream(np.array([0.5, 0.1]), np.array([0], dtype=np.int8))


def test_synthetic_environments_need_an_rng():
    with pytest.raises(ValueError):
        generate(Stationary(t=10), None)


# ---- file ingestion ----


def test_reads_comma_and_whitespace_files(tmp_path):
    f = tmp_path / "pv.csv"
    f.write_text("0.5,1\n0.25,0\n\n0.125,1\n")
    items = list(iter_pvalue_file(FileSource(str(f), p_col=0, truth_col=1)))
    assert [it.p_value for it in items] == [0.5, 0.25, 0.125]
    assert [it.truth for it in items] == [1, 0, 1]
    g = tmp_path / "pv.txt"
    g.write_text("0.5 1\n0.25 0\n")
    items = list(iter_pvalue_file(FileSource(str(g), p_col=0, truth_col=1)))
    assert [it.p_value for it in items] == [0.5, 0.25]


def test_header_row_is_skipped_when_declared(tmp_path):
    f = tmp_path / "pv.csv"
    f.write_text("p,label\n0.5,1\n")
    items = list(iter_pvalue_file(FileSource(str(f), truth_col=1, has_header=True)))
    assert len(items) == 1
    with pytest.raises(ValueError):
        list(iter_pvalue_file(FileSource(str(f), truth_col=1)))


def test_generate_materializes_a_labeled_file(tmp_path):
    f = tmp_path / "pv.csv"
    f.write_text("0.5,1\n0.25,0\n")
    s = generate(FileSource(str(f), truth_col=1), None)
    assert np.array_equal(s.p, [0.5, 0.25])
    assert np.array_equal(s.truth, [1, 0])
    bare = generate(FileSource(str(f)), None)
    assert bare.truth is None


def test_parse_errors_carry_path_and_line_number(tmp_path):
    f = tmp_path / "pv.csv"
    f.write_text("0.5,1\nnot_a_number,0\n")
    with pytest.raises(ValueError, match=r"pv\.csv:2"):
        list(iter_pvalue_file(FileSource(str(f), truth_col=1)))


def test_out_of_range_pvalue_is_rejected(tmp_path):
    f = tmp_path / "pv.csv"
    f.write_text("1.5,0\n")
    with pytest.raises(ValueError, match="outside"):
        list(iter_pvalue_file(FileSource(str(f), truth_col=1)))


def test_bad_truth_label_is_rejected(tmp_path):
    f = tmp_path / "pv.csv"
    f.write_text("0.5,2\n")
    with pytest.raises(ValueError, match="0 or 1"):
        list(iter_pvalue_file(FileSource(str(f), truth_col=1)))


def test_missing_column_is_a_parse_error(tmp_path):
    f = tmp_path / "pv.csv"
    f.write_text("0.5\n")
    with pytest.raises(ValueError, match="column 3"):
        list(iter_pvalue_file(FileSource(str(f), p_col=3)))


def test_missing_file_raises_file_not_found():
    with pytest.raises(FileNotFoundError):
        list(iter_pvalue_file(FileSource("/nonexistent/pv.csv")))


def test_negative_column_indices_are_rejected():
    with pytest.raises(ValueError):
        FileSource("x.csv", p_col=-1)
