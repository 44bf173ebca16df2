import logging
from typing import List, Optional, Sequence, Tuple

from ..core.agcode import OnePointDivisor, ProjectiveLine, ag_params
from ..core.elliptic import parse_curve
from ..core.field import FieldElement, enumerate_field, field_from_order
from ..core.linear_code import (
    add_words,
    channel_experiment,
    channel_rng,
    code_params,
    encode,
    error_word,
    hamming,
    nearest_codeword,
    rs_generator,
)
from ..models.config import ToolkitConfig
from ..models.entities import AGCodeParams, ChannelSpec, CodeParams
from ..models.exceptions import DomainError, KOutOfRange
from ..utils.logging_utils import get_logger


def _evaluation_points(elements: Sequence[FieldElement], n: int) -> Sequence[FieldElement]:
    """The first n field elements; n must lie in [1, q]."""
    if not 1 <= n <= len(elements):
        raise KOutOfRange(f"code length must satisfy 1 <= n <= q, got n={n}, q={len(elements)}")
    return elements[:n]


class CodingService:
    """Service for Reed-Solomon codes, AG codes and channel experiments."""

    def __init__(self, config: ToolkitConfig, logger: Optional[logging.Logger] = None):
        """
        Initialize CodingService with shared config.

        Args:
            config: Toolkit configuration (budgets, seed)
            logger: Optional logger instance
        """
        self.config = config
        self.logger = logger or get_logger(__name__)

    def rs_params(self, q: int, n: int, k: int) -> CodeParams:
        """
        Exact parameters of the Reed-Solomon code on the first n field elements.

        Args:
            q: Field order
            n: Code length (n <= q)
            k: Dimension

        Returns:
            CodeParams with brute-force d
        """
        try:
            self.logger.info(f"Computing RS parameters for q={q}, n={n}, k={k}")
            field = field_from_order(q, budget=self.config.field_budget)
            alphas = _evaluation_points(enumerate_field(field, budget=self.config.field_budget), n)
            code = rs_generator(alphas, k)
            params = code_params(code, budget=self.config.code_budget)
            self.logger.info(f"RS code: {params.describe()}")
            return params
        except DomainError as e:
            self.logger.error(f"RS parameters failed: {e}")
            raise

    def ag_params(self, curve_spec: str, m: int, exhaustive: bool = True) -> AGCodeParams:
        """
        Parameters of the one-point code C_L(E, P, m O_E) over all affine points of E.

        Args:
            curve_spec: Curve string such as E[q=7;A=1;B=1]
            m: Degree of the divisor
            exhaustive: Enumerate codewords for an exact d when the budget allows

        Returns:
            AGCodeParams
        """
        try:
            self.logger.info(f"Computing AG code parameters for {curve_spec}, m={m}")
            curve = parse_curve(curve_spec)
            result = ag_params(
                OnePointDivisor(curve, m),
                budget=self.config.code_budget,
                exhaustive=exhaustive,
            )
            self.logger.info(f"AG code: {result.params.describe()}, g={result.genus}")
            return result
        except DomainError as e:
            self.logger.error(f"AG code parameters failed: {e}")
            raise

    def line_params(self, q: int, m: int, exhaustive: bool = True) -> AGCodeParams:
        """One-point code on P^1 over F_q, which is Reed-Solomon of dimension m + 1."""
        try:
            self.logger.info(f"Computing P^1 code parameters for q={q}, m={m}")
            field = field_from_order(q, budget=self.config.field_budget)
            return ag_params(
                OnePointDivisor(ProjectiveLine(field), m),
                budget=self.config.code_budget,
                exhaustive=exhaustive,
            )
        except DomainError as e:
            self.logger.error(f"P^1 code parameters failed: {e}")
            raise

    def channel_weights(
        self, q: int, n: int, p_err: float, trials: int, seed: Optional[int] = None
    ) -> List[Tuple[int, int]]:
        """
        Error weights of repeated q-ary symmetric channel draws.

        Args:
            q: Alphabet size
            n: Word length
            p_err: Symbol error probability
            trials: Number of draws
            seed: Generator seed; the configured default when None

        Returns:
            (trial, weight) rows
        """
        try:
            spec = ChannelSpec(q=q, p_err=p_err, seed=self.config.seed if seed is None else seed)
            self.logger.info(f"Sampling {trials} error words of length {n} (q={q}, p={p_err})")
            return channel_experiment(spec, n, trials)
        except DomainError as e:
            self.logger.error(f"Channel experiment failed: {e}")
            raise

    def decoding_trials(
        self, q: int, n: int, k: int, errors: int, trials: int, seed: Optional[int] = None
    ) -> int:
        """
        Count how many random error patterns of a fixed weight are corrected.

        Each trial encodes a random message of the RS code, adds an error of
        exactly `errors` nonzero symbols and decodes to the nearest codeword.

        Returns:
            Number of trials decoded back to the sent codeword
        """
        try:
            field = field_from_order(q, budget=self.config.field_budget)
            elements = enumerate_field(field, budget=self.config.field_budget)
            code = rs_generator(_evaluation_points(elements, n), k)
            rng = channel_rng(ChannelSpec(q=q, p_err=0.0, seed=self.config.seed if seed is None else seed))
            corrected = 0
            for _ in range(trials):
                message = [elements[int(c)] for c in rng.integers(0, q, size=k)]
                sent = encode(code, message)
                positions = rng.choice(n, size=errors, replace=False)
                codes = [0] * n
                for pos, symbol in zip(positions, rng.integers(1, q, size=errors)):
                    codes[int(pos)] = int(symbol)
                received = add_words(sent, error_word(field, codes))
                decoded = nearest_codeword(code, received, budget=self.config.decode_budget)
                corrected += hamming(decoded, sent) == 0
            self.logger.info(f"Corrected {corrected}/{trials} patterns of weight {errors}")
            return corrected
        except DomainError as e:
            self.logger.error(f"Decoding trials failed: {e}")
            raise

