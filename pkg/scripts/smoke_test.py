"""Reproduce the published case-study numbers and print one JSON line per check.

Usage:
    python scripts/smoke_test.py
    python scripts/smoke_test.py --models models/
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from symtruss.errors import Mechanism  # noqa: E402
from symtruss.isometry import dihedral, verify_group  # noqa: E402
from symtruss.modelfile import load_model  # noqa: E402
from symtruss.quadform import classify_quadric, parse_quadratic  # noqa: E402
from symtruss.trussfem import builtin_case, compare, solve  # noqa: E402

D2_FORCES = {"AB": 173, "BC": -328, "CD": -826, "DA": 0, "AC": 462, "BD": -952}
ASYM_FORCES = {"AB": 370, "BC": -347, "CD": -964, "DA": 0, "AC": 580, "BD": -1086}


def check_solve(name: str, model, forces: dict[str, int], u_b, u_c, norm_mm: float) -> bool:
    result = solve(model)
    b = [1000 * v for v in result.displacement("B")]
    c = [1000 * v for v in result.displacement("C")]
    ok = (
        all(abs(got - want) <= 0.001 for got, want in zip(b + c, [*u_b, *u_c]))
        and abs(1000 * result.u_norm - norm_mm) <= 0.002
        and all(abs(result.axial[e] - n) <= 3 for e, n in forces.items())
    )
    print(
        json.dumps(
            {
                "check": f"solve {name}",
                "ok": ok,
                "u_B_mm": [round(v, 4) for v in b],
                "u_C_mm": [round(v, 4) for v in c],
                "u_norm_mm": round(1000 * result.u_norm, 4),
                "axial_N": {e: round(n) for e, n in result.axial.items()},
            }
        )
    )
    return ok


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--models", type=Path, help="Directory holding d2.json and asym.json")
    arguments = parser.parse_args()

    if arguments.models:
        d2, asym = load_model(arguments.models / "d2.json"), load_model(arguments.models / "asym.json")
    else:
        d2, asym = builtin_case("d2"), builtin_case("asym")

    results = [
        check_solve("d2", d2, D2_FORCES, (0.1979, 0.0165), (0.1667, -0.0787), 0.271),
        check_solve("asym", asym, ASYM_FORCES, (0.2624, 0.0352), (0.2376, -0.0919), 0.367),
    ]

    comparison = compare(d2, asym)
    ok = abs(comparison.peak_delta_pct - 14) <= 1 and abs(comparison.norm_delta_pct - 35) <= 1
    print(
        json.dumps(
            {
                "check": "compare",
                "ok": ok,
                "peak_delta_pct": round(comparison.peak_delta_pct, 2),
                "norm_delta_pct": round(comparison.norm_delta_pct, 2),
            }
        )
    )
    results.append(ok)

    quadric = classify_quadric(parse_quadratic("48x^2+32y^2-24z^2+96x-320y-960z-8944=0"))
    ok = (
        quadric.kind.value == "hyperboloid_one_sheet"
        and quadric.center == (-1.0, 5.0, -20.0)
        and all(math.isclose(d, w, rel_tol=1e-12) for d, w in zip(quadric.denominators, (4, 6, 8)))
    )
    print(json.dumps({"check": "quadric", "ok": ok, "kind": quadric.kind.value, "center": quadric.center}))
    results.append(ok)

    report = verify_group(dihedral(8))
    ok = report.ok and len(dihedral(8)) == 16
    print(json.dumps({"check": "D8", "ok": ok, "order": len(dihedral(8))}))
    results.append(ok)

    try:
        solve(builtin_case("unbraced"))
        ok = False
    except Mechanism:
        ok = True
    print(json.dumps({"check": "unbraced mechanism", "ok": ok}))
    results.append(ok)

    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())
