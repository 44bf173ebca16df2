"""
Linear codes over F_q: generator matrices, exact brute-force parameters,
Reed-Solomon codes and the q-ary symmetric channel.

Codewords are enumerated in message order: messages run through
itertools.product(enumerate_field(F), repeat=k), the first generator row being
the most significant digit. Enumeration is vectorized with numpy in blocks that
follow this order, so "first minimizer" always means smallest message index.
"""
import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..models.config import CODE_BUDGET, DECODE_BUDGET
from ..models.entities import ChannelSpec, CodeParams
from ..utils.export_utils import export_to_csv, read_csv_rows
from ..utils.logging_utils import get_logger
from ..models.exceptions import (
    BudgetExceeded,
    DNotExact,
    DuplicateEvaluationPoint,
    KOutOfRange,
    LengthMismatch,
    RankDeficient,
    SpecMismatch,
    ZeroDimensional,
)
from .field import (
    FieldElement,
    FieldSpec,
    coefficient_array,
    enumerate_field,
    field_from_order,
    multiplication_matrix,
    parse_element,
)

logger = get_logger(__name__)

Word = Sequence[FieldElement]

# Largest number of codewords materialized at once.
BLOCK_LIMIT = 2 ** 16


@dataclass(frozen=True)
class LinearCode:
    """Code spanned by the rows of a full-rank k x n generator matrix."""
    field: FieldSpec
    gen: Tuple[Tuple[FieldElement, ...], ...]

    def __post_init__(self):
        if not self.gen or not self.gen[0]:
            raise ZeroDimensional("generator matrix has no rows")
        n = len(self.gen[0])
        for row in self.gen:
            if len(row) != n:
                raise LengthMismatch("generator rows have different lengths")
            for entry in row:
                if entry.spec != self.field:
                    raise LengthMismatch(f"entry {entry!r} is not in {self.field.describe()}")
        rank = code_dimension(self.gen)
        if rank != len(self.gen):
            raise RankDeficient(f"generator has {len(self.gen)} rows but rank {rank}")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[FieldElement]]) -> "LinearCode":
        return cls(field=field, gen=tuple(tuple(row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.gen[0])

    @property
    def k(self) -> int:
        return len(self.gen)

    @property
    def q(self) -> int:
        return self.field.q


def _check_pair(x: Word, y: Word) -> None:
    if len(x) != len(y):
        raise LengthMismatch(f"words of length {len(x)} and {len(y)}")
    for a, b in zip(x, y):
        if a.spec != b.spec:
            raise LengthMismatch("words over different fields")


def hamming(x: Word, y: Word) -> int:
    """Number of coordinates where x and y differ."""
    _check_pair(x, y)
    return sum(1 for a, b in zip(x, y) if a != b)


def weight(x: Word) -> int:
    return sum(1 for a in x if not a.is_zero())


def add_words(x: Word, y: Word) -> Tuple[FieldElement, ...]:
    _check_pair(x, y)
    return tuple(a + b for a, b in zip(x, y))


def _rank(rows: Sequence[Sequence[FieldElement]]) -> int:
    matrix = [list(row) for row in rows]
    if not matrix:
        return 0
    n_cols = len(matrix[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(matrix)) if not matrix[r][col].is_zero()), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = matrix[rank][col].inv()
        matrix[rank] = [entry * inv for entry in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and not matrix[r][col].is_zero():
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
        if rank == len(matrix):
            break
    return rank


def code_dimension(gen: Sequence[Sequence[FieldElement]]) -> int:
    """Rank of a generator matrix by Gaussian elimination over F_q."""
    return _rank(gen)


def row_space_equal(first: LinearCode, second: LinearCode) -> bool:
    """Equal row spaces, checked by mutual rank."""
    if first.field != second.field or first.n != second.n or first.k != second.k:
        return False
    return _rank(first.gen + second.gen) == first.k


def encode(code: LinearCode, message: Sequence[FieldElement]) -> Tuple[FieldElement, ...]:
    if len(message) != code.k:
        raise LengthMismatch(f"message of length {len(message)} for dimension {code.k}")
    word = [code.field.zero()] * code.n
    for coeff, row in zip(message, code.gen):
        if not coeff.is_zero():
            word = [w + coeff * g for w, g in zip(word, row)]
    return tuple(word)


def is_codeword(code: LinearCode, word: Word) -> bool:
    if len(word) != code.n:
        raise LengthMismatch(f"word of length {len(word)} for code of length {code.n}")
    return _rank(code.gen + (tuple(word),)) == code.k


def _word_array(field: FieldSpec, word: Word) -> np.ndarray:
    return np.array([a.coeffs for a in word], dtype=np.int64)


def _row_multiples(code: LinearCode) -> List[np.ndarray]:
    """For each generator row, the (q, n, m) array of its scalar multiples in field order."""
    elements = coefficient_array(code.field)
    p = code.field.p
    multiples = []
    for row in code.gen:
        cols = [(elements @ multiplication_matrix(g).T) % p for g in row]
        multiples.append(np.stack(cols, axis=1))
    return multiples


def _codeword_blocks(code: LinearCode) -> Iterator[Tuple[int, np.ndarray]]:
    """Yield (first message index, (B, n, m) codeword block) in message order."""
    q, p = code.q, code.field.p
    multiples = _row_multiples(code)

    inner_rows = 1
    while inner_rows < code.k and q ** (inner_rows + 1) <= BLOCK_LIMIT:
        inner_rows += 1
    outer = multiples[:code.k - inner_rows]
    inner = multiples[code.k - inner_rows:]

    block = np.zeros((1, code.n, code.field.m), dtype=np.int64)
    for mult in inner:
        block = ((block[:, None] + mult[None, :]) % p).reshape(-1, code.n, code.field.m)

    block_size = block.shape[0]
    logger.debug(f"enumerating {q ** code.k} codewords in blocks of {block_size}")
    for outer_index, digits in enumerate(itertools.product(range(q), repeat=len(outer))):
        offset = np.zeros((code.n, code.field.m), dtype=np.int64)
        for mult, digit in zip(outer, digits):
            offset += mult[digit]
        yield outer_index * block_size, (block + offset) % p


def min_distance_bruteforce(code: LinearCode, budget: int = CODE_BUDGET) -> int:
    """
    Exact minimum distance by enumerating all q^k - 1 nonzero codewords.

    Raises:
        ZeroDimensional: if k = 0
        BudgetExceeded: if q^k exceeds the budget
    """
    if code.k == 0:
        raise ZeroDimensional("minimum distance of the zero code")
    size = code.q ** code.k
    if size > budget:
        raise BudgetExceeded("codeword enumeration", size, budget)
    best = code.n
    for start, block in _codeword_blocks(code):
        weights = block.any(axis=2).sum(axis=1)
        if start == 0:
            weights[0] = code.n + 1
        best = min(best, int(weights.min()))
    return best


def nearest_codeword(
    code: LinearCode, received: Word, budget: int = DECODE_BUDGET
) -> Tuple[FieldElement, ...]:
    """
    A codeword at minimum Hamming distance from `received`.

    Ties resolve to the smallest message index.

    Raises:
        LengthMismatch: if the received word has the wrong length
        BudgetExceeded: if q^k exceeds the budget
    """
    if len(received) != code.n:
        raise LengthMismatch(f"received word of length {len(received)} for code of length {code.n}")
    size = code.q ** code.k
    if size > budget:
        raise BudgetExceeded("nearest-codeword search", size, budget)
    target = _word_array(code.field, received)
    best_distance, best_word = code.n + 1, None
    for _, block in _codeword_blocks(code):
        distances = (block != target).any(axis=2).sum(axis=1)
        idx = int(distances.argmin())
        if distances[idx] < best_distance:
            best_distance, best_word = int(distances[idx]), block[idx]
    return tuple(code.field.element(coeffs) for coeffs in best_word.tolist())


def rs_generator(alphas: Sequence[FieldElement], k: int) -> LinearCode:
    """
    Reed-Solomon code: evaluations of 1, x, ..., x^(k-1) at distinct points.

    Raises:
        DuplicateEvaluationPoint: if two alphas coincide
        KOutOfRange: unless 1 <= k <= n <= q
    """
    if not alphas:
        raise KOutOfRange("no evaluation points")
    field = alphas[0].spec
    n = len(alphas)
    if len(set(alphas)) != n:
        raise DuplicateEvaluationPoint("evaluation points must be pairwise distinct")
    if not 1 <= k <= n <= field.q:
        raise KOutOfRange(f"need 1 <= k <= n <= q, got k={k}, n={n}, q={field.q}")
    rows = [tuple(alpha ** i for alpha in alphas) for i in range(k)]
    return LinearCode.from_rows(field, rows)


def code_params(code: LinearCode, budget: int = CODE_BUDGET) -> CodeParams:
    """Exact [n, k, d]_q by brute force."""
    return CodeParams(n=code.n, k=code.k, d=min_distance_bruteforce(code, budget), q=code.q)


def singleton_holds(params: CodeParams) -> bool:
    if not params.d_exact:
        raise DNotExact(f"{params.describe()} has only a lower bound on d")
    return params.k + params.d <= params.n + 1


def channel_rng(spec: ChannelSpec) -> np.random.Generator:
    """PCG64 generator seeded with the channel's 64-bit seed."""
    return np.random.Generator(np.random.PCG64(spec.seed))


def channel_sample(spec: ChannelSpec, n: int, rng: Optional[np.random.Generator] = None) -> np.ndarray:
    """
    Error word of the q-ary symmetric channel as element codes.

    Each symbol is 0 with probability 1 - p_err, otherwise uniform over the
    q - 1 nonzero codes. Without an explicit rng the draw depends on the seed only.
    """
    rng = rng if rng is not None else channel_rng(spec)
    corrupted = rng.random(n) < spec.p_err
    symbols = rng.integers(1, spec.q, size=n)
    return np.where(corrupted, symbols, 0)


def error_word(field: FieldSpec, codes: np.ndarray) -> Tuple[FieldElement, ...]:
    return tuple(field.from_int(int(c)) for c in codes)


def channel_experiment(spec: ChannelSpec, n: int, trials: int) -> List[Tuple[int, int]]:
    """(trial, weight) rows from one seeded generator."""
    rng = channel_rng(spec)
    return [(trial, int(np.count_nonzero(channel_sample(spec, n, rng)))) for trial in range(trials)]


CODE_CSV_HEADER = ["q", "n", "k"]


def code_csv_rows(code: LinearCode) -> List[List[str]]:
    """Header `q,n,k`, its values, then k rows of n serialized elements."""
    rows = [list(CODE_CSV_HEADER), [str(code.q), str(code.n), str(code.k)]]
    rows.extend([entry.serialize() for entry in row] for row in code.gen)
    return rows


def code_from_csv_rows(rows: Sequence[Sequence[str]]) -> LinearCode:
    if len(rows) < 2 or list(rows[0]) != CODE_CSV_HEADER:
        raise LengthMismatch("code CSV must start with the header q,n,k")
    try:
        q, n, k = (int(v) for v in rows[1])
    except ValueError:
        raise SpecMismatch(f"malformed code CSV size row {list(rows[1])}")
    field = field_from_order(q)
    body = rows[2:]
    if len(body) != k or any(len(row) != n for row in body):
        raise LengthMismatch(f"expected {k} rows of {n} entries")
    return LinearCode.from_rows(field, [[parse_element(field, cell) for cell in row] for row in body])


def code_to_csv(code: LinearCode, file_path: Optional[str] = None) -> Optional[str]:
    """Write the generator matrix as CSV to a file, or to stdout when no path is given."""
    return export_to_csv(code_csv_rows(code), file_path)


def code_from_csv(file_path: str) -> LinearCode:
    return code_from_csv_rows(read_csv_rows(file_path))


def all_messages(code: LinearCode) -> Iterator[Tuple[FieldElement, ...]]:
    """Messages in enumeration order."""
    return itertools.product(enumerate_field(code.field), repeat=code.k)
