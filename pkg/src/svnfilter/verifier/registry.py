"""The closed registry of claims and the decorator used to populate it."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import import_module
from typing import Callable

from ..errors import DuplicateName, UnknownProposition
from ..maps import ImageConvention

GROUPS = ("set-algebra", "induced-maps", "filters", "ultrafilters")
ASSERTS, REFUTES = "asserts", "refutes"


@dataclass(frozen=True)
class Claim:
    """One checkable statement.

    ``holds`` receives one keyword per slot name (plus ``conv`` for
    image-dependent claims) and must return ``True`` whenever the claim's
    preconditions fail, so that shrinking can never drift into vacuous
    counterexamples. ``stance`` is ``"refutes"`` for classical laws that are
    cited only in order to be rejected; such claims are expected to come back
    falsified. ``expected`` maps a convention value (or ``None`` for
    convention-free claims) to the status required for the build to pass;
    claims absent from it are under test and guarded by the expectations file.
    """

    tag: str
    group: str
    statement: str
    holds: Callable[..., bool]
    slots: tuple[tuple[str, str], ...] = ()
    fixed: Callable[[], list[dict]] | None = None
    stance: str = ASSERTS
    image_dependent: bool = False
    expected: dict = field(default_factory=dict)
    lattice_points_cap: int | None = None

    @property
    def slot_names(self) -> list[str]:
        return [name for names, _ in self.slots for name in names.split(",")]

    def conventions(self, requested) -> list[ImageConvention | None]:
        if not self.image_dependent:
            return [None]
        return list(requested)

    def expected_status(self, conv: ImageConvention | None) -> str | None:
        return self.expected.get(conv.value if conv else None)


REGISTRY: dict[str, Claim] = {}


def register(tag, group, statement, slots=(), *, fixed=None, stance=ASSERTS, image=False,
             expected="verified", lattice_points_cap=None):
    """Decorator turning a predicate into a registered claim.

    ``expected`` is a status for every convention, ``None`` for a claim under
    test, or a dict keyed by convention value.
    """
    if group not in GROUPS:
        raise ValueError(f"unknown group {group!r}")

    def deco(fn):
        if tag in REGISTRY:
            raise DuplicateName(f"claim {tag!r} registered twice")
        if isinstance(expected, dict):
            exp = dict(expected)
        elif expected is None:
            exp = {}
        elif image:
            exp = {c.value: expected for c in ImageConvention}
        else:
            exp = {None: expected}
        parsed = tuple((names, kind) for names, kind in slots)
        REGISTRY[tag] = Claim(tag, group, statement, fn, parsed, fixed, stance, image, exp, lattice_points_cap)
        return fn

    return deco


def _load_claims():
    # importing the claims module populates REGISTRY
    import_module(f"{__package__}.claims")


def get_claim(tag: str) -> Claim:
    _load_claims()
    try:
        return REGISTRY[tag]
    except KeyError:
        raise UnknownProposition(f"no claim registered under {tag!r}") from None


def all_claims() -> list[Claim]:
    _load_claims()
    return sorted(REGISTRY.values(), key=lambda c: GROUPS.index(c.group))
