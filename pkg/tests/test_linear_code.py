import math

import numpy as np
import pytest

from src.core.field import enumerate_field
from src.core.linear_code import (
    LinearCode,
    add_words,
    all_messages,
    channel_experiment,
    channel_rng,
    channel_sample,
    code_dimension,
    code_csv_rows,
    code_from_csv,
    code_from_csv_rows,
    code_params,
    code_to_csv,
    encode,
    error_word,
    hamming,
    is_codeword,
    min_distance_bruteforce,
    nearest_codeword,
    row_space_equal,
    rs_generator,
    singleton_holds,
    weight,
)
from src.models.entities import ChannelSpec, CodeParams
from src.models.exceptions import (
    BudgetExceeded,
    DNotExact,
    DomainError,
    DuplicateEvaluationPoint,
    KOutOfRange,
    LengthMismatch,
    RankDeficient,
    SpecMismatch,
)
from src.utils.export_utils import export_to_csv, read_csv_rows


def word(field, values):
    return tuple(field.element(v) for v in values)


@pytest.fixture
def rs733(f7):
    return rs_generator(enumerate_field(f7), 3)


def test_hamming_and_weight(f7):
    x = word(f7, (1, 2, 3))
    assert hamming(x, x) == 0
    assert hamming(x, word(f7, (1, 5, 3))) == 1
    assert weight(word(f7, (1, 0, 3, 0))) == 2


def test_hamming_length_mismatch(f7):
    with pytest.raises(LengthMismatch):
        hamming(word(f7, (1, 2)), word(f7, (1, 2, 3)))


def test_code_dimension(f7):
    identity = [word(f7, (1, 0, 0, 0)), word(f7, (0, 1, 0, 0))]
    assert code_dimension(identity) == 2
    assert code_dimension([word(f7, (1, 2, 3)), word(f7, (1, 2, 3))]) == 1


def test_rank_deficient_generator(f7):
    with pytest.raises(RankDeficient):
        LinearCode.from_rows(f7, [word(f7, (1, 2, 3)), word(f7, (2, 4, 6))])


def test_rs_generator_rank(rs733):
    assert rs733.k == 3
    assert code_dimension(rs733.gen) == 3


def test_repetition_code_distance(f7):
    code = LinearCode.from_rows(f7, [word(f7, (1, 1, 1, 1, 1))])
    assert min_distance_bruteforce(code) == 5


def test_rs_733_is_mds(rs733):
    params = code_params(rs733)
    assert (params.n, params.k, params.d) == (7, 3, 5)
    assert params.d_exact


@pytest.mark.parametrize("k", range(1, 8))
def test_rs_over_f7_meets_singleton(f7, k):
    code = rs_generator(enumerate_field(f7), k)
    assert min_distance_bruteforce(code) == 7 - k + 1


def test_rs_generator_errors(f7):
    elements = enumerate_field(f7)
    with pytest.raises(DuplicateEvaluationPoint):
        rs_generator([elements[1], elements[1], elements[2]], 2)
    with pytest.raises(KOutOfRange):
        rs_generator(elements[:3], 0)
    with pytest.raises(KOutOfRange):
        rs_generator(elements[:3], 4)


def test_distance_budget(rs733):
    with pytest.raises(BudgetExceeded):
        min_distance_bruteforce(rs733, budget=100)


def test_singleton_holds():
    assert singleton_holds(CodeParams(n=7, k=3, d=5, q=7))
    assert singleton_holds(CodeParams(n=5, k=1, d=5, q=7))
    assert not singleton_holds(CodeParams(n=5, k=3, d=4, q=7))
    with pytest.raises(DNotExact):
        singleton_holds(CodeParams(n=7, k=3, d=4, q=7, d_exact=False))


def test_encode_produces_codewords(f7, rs733):
    message = word(f7, (2, 0, 5))
    codeword = encode(rs733, message)
    assert is_codeword(rs733, codeword)
    assert not is_codeword(rs733, add_words(codeword, word(f7, (1, 0, 0, 0, 0, 0, 0))))


def test_message_order(f7, rs733):
    messages = all_messages(rs733)
    assert next(messages) == word(f7, (0, 0, 0))
    assert next(messages) == word(f7, (0, 0, 1))


def test_nearest_codeword_of_codeword(f7, rs733):
    codeword = encode(rs733, word(f7, (3, 1, 4)))
    assert nearest_codeword(rs733, codeword) == codeword


def test_two_errors_always_corrected(f7, rs733):
    rng = np.random.Generator(np.random.PCG64(7))
    elements = enumerate_field(f7)
    for _ in range(100):
        sent = encode(rs733, [elements[int(c)] for c in rng.integers(0, 7, size=3)])
        codes = np.zeros(7, dtype=np.int64)
        codes[rng.choice(7, size=2, replace=False)] = rng.integers(1, 7, size=2)
        received = add_words(sent, error_word(f7, codes))
        assert nearest_codeword(rs733, received) == sent


def test_nearest_codeword_length_check(f7, rs733):
    with pytest.raises(LengthMismatch):
        nearest_codeword(rs733, word(f7, (1, 2)))


def test_channel_spec_validation():
    with pytest.raises(DomainError):
        ChannelSpec(q=7, p_err=0.9, seed=1)
    with pytest.raises(DomainError):
        ChannelSpec(q=1, p_err=0.0, seed=1)


def test_noiseless_channel():
    spec = ChannelSpec(q=7, p_err=0.0, seed=3)
    rng = channel_rng(spec)
    for _ in range(20):
        assert not channel_sample(spec, 50, rng).any()


def test_channel_is_deterministic_per_seed():
    spec = ChannelSpec(q=7, p_err=0.3, seed=11)
    assert channel_sample(spec, 200).tolist() == channel_sample(spec, 200).tolist()
    assert channel_experiment(spec, 50, 10) == channel_experiment(spec, 50, 10)


def test_uniform_channel_mean_weight():
    q, n, trials = 7, 100, 2000
    p = 1 - 1 / q
    rows = channel_experiment(ChannelSpec(q=q, p_err=p, seed=5), n, trials)
    mean = sum(w for _, w in rows) / trials
    assert abs(mean - n * p) <= 3 * math.sqrt(n * p * (1 - p) / trials)


def test_channel_mean_weight_matches_pn():
    n, p, trials = 1000, 0.1, 10_000
    rows = channel_experiment(ChannelSpec(q=7, p_err=p, seed=20240601), n, trials)
    assert [t for t, _ in rows[:3]] == [0, 1, 2]
    mean = sum(w for _, w in rows) / trials
    assert abs(mean - p * n) <= 3 * math.sqrt(n * p * (1 - p) / trials)


def test_csv_round_trip_through_file(f49, tmp_path):
    code = rs_generator(enumerate_field(f49)[:10], 4)
    path = str(tmp_path / "codes" / "rs.csv")
    export_to_csv(code_csv_rows(code), path)
    rows = read_csv_rows(path)
    assert rows[0] == ["q", "n", "k"]
    assert rows[1] == ["49", "10", "4"]
    restored = code_from_csv_rows(rows)
    assert restored == code
    assert row_space_equal(restored, code)


def test_row_space_equal_after_row_operations(f7, rs733):
    a, b, c = rs733.gen
    mixed = LinearCode.from_rows(f7, [add_words(a, b), b, tuple(3 * x for x in c)])
    assert row_space_equal(rs733, mixed)
    other = rs_generator(enumerate_field(f7)[1:] + enumerate_field(f7)[:1], 3)
    assert row_space_equal(rs733, other)


def test_code_csv_file_helpers(f7, rs733, tmp_path):
    path = str(tmp_path / "rs733.csv")
    assert code_to_csv(rs733, path) == path
    assert code_from_csv(path) == rs733


def test_code_csv_errors():
    with pytest.raises(LengthMismatch):
        code_from_csv_rows([["n", "k"], ["7", "3"]])
    with pytest.raises(SpecMismatch):
        code_from_csv_rows([["q", "n", "k"], ["7", "x", "3"]])
    with pytest.raises(LengthMismatch):
        code_from_csv_rows([["q", "n", "k"], ["7", "2", "1"], ["1", "2", "3"]])
