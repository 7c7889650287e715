"""Pass/fail reports shared by all verification surfaces.

Every axiom check records a name, a boolean, and the max-norm of the
violating difference matrix — exactly "0" under exact arithmetic when the
check passes, a nonzero scalar string otherwise.
"""

from .linalg import Matrix


class Check:
    __slots__ = ("name", "passed", "residue", "detail")

    def __init__(self, name, passed, residue="0", detail=None):
        self.name = name
        self.passed = bool(passed)
        self.residue = residue
        self.detail = detail

    def to_json(self):
        out = {"name": self.name, "passed": self.passed, "residue": self.residue}
        if self.detail is not None:
            out["detail"] = self.detail
        return out

    def __repr__(self):
        return "Check(%r, %s)" % (self.name, "pass" if self.passed else "FAIL")


class Report:
    def __init__(self, checks=None):
        self.checks = list(checks) if checks else []

    def add(self, check: Check):
        self.checks.append(check)
        return check

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_json(self):
        return [c.to_json() for c in self.checks]

    def require(self, context=""):
        if not self.passed:
            names = ", ".join(c.name for c in self.failures())
            raise VerificationError("%sfailed checks: %s"
                                    % (context + ": " if context else "", names))
        return self

    def __repr__(self):
        n = len(self.checks)
        bad = len(self.failures())
        return "Report(%d checks, %d failing)" % (n, bad)


class VerificationError(Exception):
    """An exact identity that the construction promises did not hold."""


def max_norm(diff: Matrix) -> str:
    """Max-norm of a difference matrix as a scalar string ("0" iff zero)."""
    field = diff.field
    entries = [x for row in diff.data for x in row]
    if not entries:
        return "0"
    worst = max(entries, key=field.abs_key)
    if field.is_zero(worst):
        return "0"
    return field.format(worst)


def check_equal(name: str, lhs: Matrix, rhs: Matrix, detail=None) -> Check:
    """Exact matrix identity check; residue is the max-norm of lhs − rhs."""
    if lhs.rows != rhs.rows or lhs.cols != rhs.cols:
        return Check(name, False, residue="shape",
                     detail={"lhs_shape": [lhs.rows, lhs.cols],
                             "rhs_shape": [rhs.rows, rhs.cols]})
    diff = lhs - rhs
    ok = diff.is_zero()
    return Check(name, ok, residue=max_norm(diff), detail=detail if not ok else None)
