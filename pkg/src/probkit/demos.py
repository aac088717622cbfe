"""Worked scenarios: children, dice, cards, urns, Bayes problems and two joint tables."""

from __future__ import annotations

import itertools
from collections.abc import Callable
from fractions import Fraction

from probkit.core.errors import DomainError
from probkit.core.rational import to_fraction
from probkit.couples import JointLaw, diagonal_mgf_factorizes, is_independent
from probkit.distributions import Binomial
from probkit.finite_space import (
    CausePartition,
    Event,
    FiniteProbabilitySpace,
    bayes_posterior,
    conditional_prob,
    equiprobable_space,
    independence_report,
    prob,
    total_probability,
)
from probkit.moments import FiniteRv, expectation

type DemoValue = Fraction | float | bool
type DemoReport = dict[str, DemoValue]

UMBRELLA_FLOORS = 7
DIE_FACES = 6
TWO_DICE_SUM = 9
THREE_DICE_SUM = 6
_LOW_FACES = frozenset({1, 2, 3})


def three_children_space() -> FiniteProbabilitySpace:
    """Equiprobable sexes of three children, listed from the oldest (``"BGG"`` etc.)."""
    return equiprobable_space(["".join(sexes) for sexes in itertools.product("BG", repeat=3)])


def three_children_events(space: FiniteProbabilitySpace) -> dict[str, Event]:
    """The three events of interest on :func:`three_children_space`."""
    return {
        "at least one boy": space.event(lambda label: "B" in label),
        "no girl older than a boy": space.event(lambda label: "GB" not in label),
        "exactly one girl": space.event(lambda label: label.count("G") == 1),
    }


def dice_triples_space() -> FiniteProbabilitySpace:
    """Equiprobable outcomes of three tosses of a die."""
    return equiprobable_space(list(itertools.product(range(1, DIE_FACES + 1), repeat=3)))


def bernstein_space() -> tuple[FiniteProbabilitySpace, list[Event]]:
    """Four equiprobable cards 112, 121, 211, 222 and the events "1 in place i"."""
    space = equiprobable_space(["112", "121", "211", "222"])
    events = [space.event(lambda label, place=place: label[place] == "1") for place in range(3)]
    return space, events


def two_dice_space() -> tuple[FiniteProbabilitySpace, list[Event]]:
    """Two dice with A = first in 1..3, B = second in 4..6 and C = sum equal to 9."""
    space = equiprobable_space(list(itertools.product(range(1, DIE_FACES + 1), repeat=2)))
    events = [
        space.event(lambda pair: pair[0] in _LOW_FACES),
        space.event(lambda pair: pair[1] not in _LOW_FACES),
        space.event(lambda pair: pair[0] + pair[1] == TWO_DICE_SUM),
    ]
    return space, events


def umbrella_partition(p: Fraction) -> CausePartition:
    """Causes "umbrella on floor i" (prior p/7 each) and "not in the building" (prior 1 - p).

    The observed event is "not found on floors 1 to 6".
    """
    if not 0 <= p <= 1:
        message = f"p must lie in [0, 1], got {p}"
        raise DomainError(message)
    floor_prior = p / UMBRELLA_FLOORS
    priors = (*([floor_prior] * UMBRELLA_FLOORS), 1 - p)
    likelihoods = (*([Fraction(0)] * (UMBRELLA_FLOORS - 1)), Fraction(1), Fraction(1))
    return CausePartition(priors=priors, likelihoods=likelihoods)


def disease_partition() -> CausePartition:
    """Screening test: P(D) = 3/10, P(positive | D) = 9/10, P(negative | healthy) = 8/10."""
    return CausePartition(
        priors=(Fraction(3, 10), Fraction(7, 10)),
        likelihoods=(Fraction(9, 10), 1 - Fraction(8, 10)),
    )


def ages_rv() -> FiniteRv:
    """Ages of 24 students: five aged 19, seven 20, ten 23 and two 17."""
    counts = {19: 5, 20: 7, 23: 10, 17: 2}
    return FiniteRv.from_pairs((age, Fraction(count, 24)) for age, count in counts.items())


def lazy_student_law() -> Binomial:
    """Twenty four-choice questions answered at random."""
    return Binomial(n=20, p=Fraction(1, 4))


def two_by_three_table() -> JointLaw:
    """X in {1, 2}, Y in {2, 3, 4} with a structural zero at (1, 4)."""
    return JointLaw(
        x_values=(1, 2),
        y_values=(2, 3, 4),
        matrix=(
            (Fraction(2, 10), Fraction(3, 10), Fraction(0)),
            (Fraction(0), Fraction(1, 10), Fraction(4, 10)),
        ),
    )


def stoyanov_table() -> JointLaw:
    """Dependent couple with uniform marginals on {1, 2, 3} whose diagonal MGF factorizes."""
    rows = ((2, 1, 3), (3, 2, 1), (1, 3, 2))
    return JointLaw(
        x_values=(1, 2, 3),
        y_values=(1, 2, 3),
        matrix=tuple(tuple(Fraction(cell, 18) for cell in row) for row in rows),
    )


def three_children_report(_: Fraction | None = None) -> DemoReport:
    """Probabilities of the three children events."""
    space = three_children_space()
    return {name: prob(space, event) for name, event in three_children_events(space).items()}


def dice_report(_: Fraction | None = None) -> DemoReport:
    """P(first toss is 1 | sum of three tosses is 6)."""
    space = dice_triples_space()
    sum_six = space.event(lambda triple: sum(triple) == THREE_DICE_SUM)
    first_one = space.event(lambda triple: triple[0] == 1)
    return {
        "P(sum = 6)": prob(space, sum_six),
        "P(first = 1 | sum = 6)": conditional_prob(space, first_one, sum_six),
    }


def bernstein_report(_: Fraction | None = None) -> DemoReport:
    """Pairwise but not mutually independent events."""
    space, events = bernstein_space()
    report = independence_report(space, events)
    return {
        "P(A1 A2 A3)": prob(space, events[0] & events[1] & events[2]),
        "pairwise": report.pairwise,
        "mutual": report.mutual,
        "global": report.global_,
    }


def two_dice_report(_: Fraction | None = None) -> DemoReport:
    """Globally but not pairwise independent events."""
    space, events = two_dice_space()
    report = independence_report(space, events)
    return {
        "P(B C)": prob(space, events[1] & events[2]),
        "P(B) P(C)": prob(space, events[1]) * prob(space, events[2]),
        "pairwise": report.pairwise,
        "mutual": report.mutual,
        "global": report.global_,
    }


def umbrella_report(p: Fraction | None = None) -> DemoReport:
    """Posterior probability that the umbrella is on the last floor."""
    level = Fraction(1, 2) if p is None else p
    partition = umbrella_partition(level)
    posteriors = bayes_posterior(partition, allow_null_causes=True)
    return {"P(last floor | not on floors 1-6)": posteriors[UMBRELLA_FLOORS - 1]}


def disease_report(_: Fraction | None = None) -> DemoReport:
    """Probability of disease after a positive test."""
    partition = disease_partition()
    return {
        "P(positive)": total_probability(partition),
        "P(D | positive)": bayes_posterior(partition)[0],
    }


def ages_report(_: Fraction | None = None) -> DemoReport:
    """Mean age of the class."""
    return {"mean age": expectation(ages_rv())}


def lazy_student_report(_: Fraction | None = None) -> DemoReport:
    """Probability of at least ten correct answers by guessing."""
    law = lazy_student_law()
    return {"P(X >= 10)": law.sf(9), "1 - F(9)": 1.0 - law.cdf(9)}


def stoyanov_report(_: Fraction | None = None) -> DemoReport:
    """Diagonal MGF factorization without independence."""
    joint = stoyanov_table()
    return {
        "independent": is_independent(joint),
        "diagonal MGF factorizes": diagonal_mgf_factorizes(joint),
    }


DEMOS: dict[str, Callable[[Fraction | None], DemoReport]] = {
    "umbrella": umbrella_report,
    "lazy-student": lazy_student_report,
    "three-children": three_children_report,
    "dice": dice_report,
    "bernstein": bernstein_report,
    "two-dice": two_dice_report,
    "disease": disease_report,
    "stoyanov": stoyanov_report,
    "ages": ages_report,
}


def run_demo(name: str, p: float | str | Fraction | None = None) -> DemoReport:
    """Run the named scenario; only ``umbrella`` reads *p*."""
    try:
        builder = DEMOS[name]
    except KeyError as error:
        message = f"Unknown demo {name!r}; choose one of {', '.join(DEMOS)}"
        raise DomainError(message) from error
    return builder(None if p is None else to_fraction(p))


__all__ = [
    "DEMOS",
    "DemoReport",
    "DemoValue",
    "ages_rv",
    "bernstein_space",
    "dice_triples_space",
    "disease_partition",
    "lazy_student_law",
    "run_demo",
    "stoyanov_table",
    "three_children_events",
    "three_children_space",
    "two_by_three_table",
    "two_dice_space",
    "umbrella_partition",
]
