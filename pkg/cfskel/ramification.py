from typing import List
from typing import Tuple
from typing import Sequence
from dataclasses import dataclass

from .errors import InputError
from .toolkit import require_prime
from .toolkit import p_adic_valuation
from .toolkit import require_positive
from .toolkit import require_non_negative


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def validate_filtration(orders: Sequence[int]) -> Tuple[int, ...]:
    if not orders:
        raise InputError("filtration orders should not be empty")
    for order in orders:
        if not isinstance(order, int) or order < 1:
            raise InputError(f"filtration order should be positive, but got {order}")
    for i in range(1, len(orders)):
        previous, current = orders[i - 1], orders[i]
        if current > previous:
            raise InputError(
                f"filtration orders should be non-increasing, but |G_{i}|={current} "
                f"exceeds |G_{i - 1}|={previous}"
            )
        if previous % current != 0:
            raise InputError(
                f"|G_{i}|={current} does not divide |G_{i - 1}|={previous}"
            )
    return tuple(orders)


@dataclass(frozen=True)
class DifferentValue:
    """
    The additive different and log-different of an extension, in units of v_E.

    Attributes
    ----------
    delta : int
        The different, i.e. the length of the module of differentials.
    delta_log : int
        The log-different, always equal to `delta + 1 - e`.
    e : int
        The ramification index.

    """

    delta: int
    delta_log: int
    e: int

    def __post_init__(self) -> None:
        require_positive(self.e, "ramification index")
        if self.delta_log != self.delta + 1 - self.e:
            raise InputError(
                f"inconsistent different value: delta_log={self.delta_log} but "
                f"delta + 1 - e = {self.delta + 1 - self.e}"
            )
        if self.delta_log < 0:
            raise InputError(f"log-different should be non-negative: {self}")

    @property
    def is_tame(self) -> bool:
        return tameness(self.delta_log)

    @property
    def is_unramified(self) -> bool:
        return is_unramified(self.delta)


@dataclass(frozen=True)
class RamificationDatum:
    """
    Ramification data of a finite extension of discretely valued fields.

    The residue field is algebraically closed, so the extension is totally
    ramified and `e = |G_0|`.

    Attributes
    ----------
    e : int
        The ramification index.
    p : int
        The residue characteristic, 0 or a prime.
    filtration_orders : Tuple[int, ...]
        Orders |G_0| >= |G_1| >= ... of the lower numbering filtration, trailing
        ones allowed.

    """

    e: int
    p: int
    filtration_orders: Tuple[int, ...]

    def __post_init__(self) -> None:
        require_positive(self.e, "ramification index")
        orders = validate_filtration(self.filtration_orders)
        object.__setattr__(self, "filtration_orders", orders)
        if orders[0] != self.e:
            raise InputError(f"|G_0|={orders[0]} should equal e={self.e}")
        if self.p == 0:
            if any(order != 1 for order in orders[1:]):
                raise InputError("residue characteristic 0 admits no wild inertia")
            return
        require_prime(self.p)
        if len(orders) > 1:
            wild = orders[1]
            if not _is_power_of(wild, self.p):
                raise InputError(f"|G_1|={wild} should be a power of p={self.p}")
            if (orders[0] // wild) % self.p == 0:
                raise InputError(f"|G_0/G_1| should be prime to p={self.p}")

    @classmethod
    def cyclic(cls, p: int, j: int) -> "RamificationDatum":
        require_prime(p)
        require_positive(j, "jump")
        return cls(e=p, p=p, filtration_orders=tuple([p] * (j + 1)))

    @property
    def jumps(self) -> List[int]:
        orders = list(self.filtration_orders) + [1]
        return [i for i in range(len(orders) - 1) if orders[i + 1] < orders[i]]

    @property
    def different(self) -> DifferentValue:
        delta = hilbert_different(self.filtration_orders)
        return DifferentValue(delta, log_different(delta, self.e), self.e)


def hilbert_different(orders: Sequence[int]) -> int:
    return sum(order - 1 for order in validate_filtration(orders))


def cyclic_jump_invariants(p: int, j: int) -> DifferentValue:
    require_prime(p)
    require_positive(j, "jump")
    return DifferentValue(delta=(p - 1) * (j + 1), delta_log=(p - 1) * j, e=p)


def log_different(delta: int, e: int) -> int:
    return delta + 1 - e


def tower_different(delta_ef: int, e_ef: int, delta_fg: int) -> int:
    require_non_negative(delta_ef, "delta(E/F)")
    require_positive(e_ef, "e(E/F)")
    require_non_negative(delta_fg, "delta(F/G)")
    return delta_ef + e_ef * delta_fg


def tower_log_different(dlog_ef: int, e_ef: int, dlog_fg: int) -> int:
    require_non_negative(dlog_ef, "delta_log(E/F)")
    require_positive(e_ef, "e(E/F)")
    require_non_negative(dlog_fg, "delta_log(F/G)")
    return dlog_ef + e_ef * dlog_fg


def tameness(delta_log: int) -> bool:
    require_non_negative(delta_log, "log-different")
    return delta_log == 0


def is_unramified(delta: int) -> bool:
    require_non_negative(delta, "different")
    return delta == 0


def integer_valuation(n: int, p: int, e: int = 1) -> int:
    """v_E(n) for an integer n, where E has absolute ramification e over Q_p."""
    require_prime(p)
    require_positive(e, "ramification index")
    return e * p_adic_valuation(n, p)


def log_different_bound_check(delta_log: int, bound: int) -> bool:
    require_non_negative(delta_log, "log-different")
    return delta_log <= bound


__all__ = [
    "DifferentValue",
    "RamificationDatum",
    "validate_filtration",
    "hilbert_different",
    "cyclic_jump_invariants",
    "log_different",
    "tower_different",
    "tower_log_different",
    "tameness",
    "is_unramified",
    "integer_valuation",
    "log_different_bound_check",
]
