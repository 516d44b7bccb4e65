"""Collects acceptance sub-check outcomes so the run can end with one line per criterion."""

TITLES = {
    1: "worked F_7 example reproduction",
    2: "dual cross-validation (formula vs null space)",
    3: "counting formulas",
    4: "dual degree identities",
    5: "circ map vs shift inner products",
    6: "algebraic identities",
    7: "closure properties",
    8: "standardized form and parity check",
}

RESULTS = {}


def record(criterion, check, ok, detail=""):
    RESULTS.setdefault(criterion, []).append((check, bool(ok), detail))
    return ok


def summary_lines():
    lines = []
    for crit in sorted(RESULTS):
        checks = RESULTS[crit]
        ok = all(c[1] for c in checks)
        lines.append(f"{'PASS' if ok else 'FAIL'}  criterion {crit}: {TITLES.get(crit, '')}")
        for check, passed, detail in checks:
            mark = "ok  " if passed else "FAIL"
            lines.append(f"        {mark} {check}" + (f"  ({detail})" if detail else ""))
    return lines
