"""End-to-end example that exercises the probkit Python API."""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

from rich.console import Console

try:
    from probkit.couples import diagonal_mgf_factorizes, is_independent, read_joint_csv
    from probkit.demos import disease_partition
    from probkit.distributions import Binomial, Normal
    from probkit.finite_space import bayes_posterior, space_from_json
    from probkit.moments import summarize
except ModuleNotFoundError as error:  # pragma: no cover - documentation helper
    if "probkit" not in (error.name or ""):
        raise
    project_root = Path(__file__).resolve().parents[1]
    src_path = project_root / "src"
    if str(src_path) not in sys.path:
        sys.path.insert(0, str(src_path))
    from probkit.couples import diagonal_mgf_factorizes, is_independent, read_joint_csv
    from probkit.demos import disease_partition
    from probkit.distributions import Binomial, Normal
    from probkit.finite_space import bayes_posterior, space_from_json
    from probkit.moments import summarize


def main() -> None:
    """Walk through the bundled fixtures and print the headline numbers."""
    console = Console()
    base_dir = Path(__file__).resolve().parent

    lazy_student = Binomial(n=20, p=Fraction(1, 4))
    console.print(f"Lazy student, P(X >= 10): {1.0 - lazy_student.cdf(9):.8f}")
    console.print(f"Standard normal, P(Z <= 1.96): {Normal().cdf(1.96):.7f}")

    posterior = bayes_posterior(disease_partition())[0]
    console.print(f"Disease given a positive test: {posterior} = {float(posterior):.7f}")

    space = space_from_json((base_dir / "three_children_space.json").read_text(encoding="utf-8"))
    console.print(f"Three children space has {space.size} outcomes")

    for name in ("two_by_three.csv", "stoyanov.csv", "product.csv"):
        joint = read_joint_csv(base_dir / name).joint
        console.print(
            f"{name}: independent={is_independent(joint)} "
            f"diagonal MGF factorizes={diagonal_mgf_factorizes(joint)}",
        )
        console.print(summarize(joint.marginal_x()))


if __name__ == "__main__":
    main()
