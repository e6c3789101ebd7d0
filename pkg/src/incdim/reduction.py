"""Executable 3-SAT reduction to incidence-dimension instances.

Each variable contributes a 6-vertex truth-setting gadget with TRUE /
FALSE ports, each clause a 9-vertex gadget isomorphic to C_3 x C_3
(Cartesian product), and each literal occurrence two communication
edges from the port representing the value that falsifies it.  The
threshold is r = 4n + 8m: the formula is satisfiable exactly when the
graph has an incidence generator of that size (equivalently, a
2-packing of size 2n + m).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import build_graph
from .incidence import is_incidence_generator

TRUTH_GADGET_SIZE = 6
CLAUSE_GADGET_SIZE = 9


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple       # tuple of 3-tuples of signed DIMACS literals
    var_map: dict = field(default_factory=dict, compare=False)

    def threshold(self):
        return 4 * self.num_vars + 8 * len(self.clauses)


@dataclass(frozen=True)
class ReductionOutput:
    graph: object
    r: int
    labels: dict              # structured name -> vertex index
    communication_edges: tuple
    formula: CnfFormula

    @property
    def names(self):
        inv = {v: k for k, v in self.labels.items()}
        return tuple(inv[i] for i in range(self.graph.n))


def _validate_clause(lits, lineno=None):
    where = f"line {lineno}: " if lineno else ""
    if len(lits) != 3:
        raise ValueError(f"{where}not 3-CNF: clause has {len(lits)} literals")
    variables = [abs(l) for l in lits]
    if len(set(variables)) != 3:
        raise ValueError(f"{where}not 3-CNF: clause repeats a variable")


def parse_cnf(text):
    """Parse DIMACS CNF with every clause of width exactly 3.

    Clauses repeating a variable (duplicate or tautological literals)
    are rejected.  Out-of-range variable indices cause a dense
    renumbering, reported in var_map (original -> dense)."""
    num_vars = None
    num_clauses = None
    clauses = []
    pending = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise ValueError(f"line {lineno}: malformed DIMACS header")
            try:
                num_vars, num_clauses = int(fields[2]), int(fields[3])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed DIMACS header")
            continue
        if num_vars is None:
            raise ValueError(f"line {lineno}: clause before DIMACS header")
        try:
            lits = [int(f) for f in line.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integer literals")
        for lit in lits:
            if lit == 0:
                _validate_clause(pending, lineno)
                clauses.append(tuple(pending))
                pending = []
            else:
                pending.append(lit)
    if pending:
        raise ValueError("unterminated clause (missing trailing 0)")
    if num_vars is None:
        raise ValueError("missing DIMACS header")
    if num_clauses is not None and len(clauses) != num_clauses:
        raise ValueError(f"header declares {num_clauses} clauses, "
                         f"found {len(clauses)}")
    used = sorted({abs(l) for cl in clauses for l in cl})
    var_map = {}
    if any(v > num_vars or v < 1 for v in used):
        var_map = {v: i + 1 for i, v in enumerate(used)}
        clauses = [tuple((1 if l > 0 else -1) * var_map[abs(l)] for l in cl)
                   for cl in clauses]
        num_vars = len(used)
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses),
                      var_map=var_map)


def _gadget_labels(f):
    labels = {}
    for i in range(1, f.num_vars + 1):
        base = TRUTH_GADGET_SIZE * (i - 1)
        for off, name in enumerate(("x", "y", "z", "w", "T", "F")):
            labels[f"{name}_{i}"] = base + off
    clause_base = TRUTH_GADGET_SIZE * f.num_vars
    for j in range(1, len(f.clauses) + 1):
        base = clause_base + CLAUSE_GADGET_SIZE * (j - 1)
        for k in range(1, 4):
            for off, name in enumerate(("a", "b", "c")):
                labels[f"{name}_{j}^{k}"] = base + 3 * (k - 1) + off
    return labels


def build_reduction(f):
    """Compile a 3-CNF formula into its incidence-dimension instance."""
    for cl in f.clauses:
        _validate_clause(cl)
    lab = _gadget_labels(f)
    edges = []
    for i in range(1, f.num_vars + 1):
        x, y, z, w, t, fa = (lab[f"{s}_{i}"] for s in ("x", "y", "z",
                                                       "w", "T", "F"))
        edges += [(x, y), (x, z), (y, z), (y, w), (z, w),
                  (w, t), (w, fa), (t, fa)]
    for j in range(1, len(f.clauses) + 1):
        a = [lab[f"a_{j}^{k}"] for k in (1, 2, 3)]
        b = [lab[f"b_{j}^{k}"] for k in (1, 2, 3)]
        c = [lab[f"c_{j}^{k}"] for k in (1, 2, 3)]
        for row in (a, b, c):                       # triangles within rows
            edges += [(row[0], row[1]), (row[1], row[2]), (row[2], row[0])]
        for k in range(3):                          # column triangles
            edges += [(a[k], b[k]), (b[k], c[k]), (c[k], a[k])]
    comm = []
    for j, clause in enumerate(f.clauses, start=1):
        for k, lit in enumerate(clause, start=1):
            i = abs(lit)
            port = lab[f"F_{i}"] if lit > 0 else lab[f"T_{i}"]
            comm.append((port, lab[f"b_{j}^{k}"]))
            comm.append((port, lab[f"c_{j}^{k}"]))
    n_vertices = (TRUTH_GADGET_SIZE * f.num_vars
                  + CLAUSE_GADGET_SIZE * len(f.clauses))
    graph = build_graph(n_vertices, edges + comm)
    return ReductionOutput(graph=graph, r=f.threshold(), labels=lab,
                           communication_edges=tuple(comm), formula=f)


def _check_assignment(f, t):
    """Return the 1-based index of the first unsatisfied clause, or 0."""
    for j, clause in enumerate(f.clauses, start=1):
        if not any(t[abs(lit)] == (lit > 0) for lit in clause):
            return j
    return 0


def assignment_to_generator(red, t):
    """Incidence generator of size exactly r from a satisfying truth
    assignment t (mapping variable index -> bool)."""
    f = red.formula
    bad = _check_assignment(f, t)
    if bad:
        raise ValueError(f"assignment not satisfying: clause {bad} "
                         f"{f.clauses[bad - 1]}")
    lab = red.labels
    s = set()
    for i in range(1, f.num_vars + 1):
        s.update(lab[f"{name}_{i}"] for name in ("y", "z", "w"))
        s.add(lab[f"F_{i}"] if t[i] else lab[f"T_{i}"])
    for j, clause in enumerate(f.clauses, start=1):
        for k in (1, 2, 3):
            s.add(lab[f"b_{j}^{k}"])
            s.add(lab[f"c_{j}^{k}"])
        # smallest satisfying literal position stays out of S
        sat_k = next(k for k, lit in enumerate(clause, start=1)
                     if t[abs(lit)] == (lit > 0))
        for k in (1, 2, 3):
            if k != sat_k:
                s.add(lab[f"a_{j}^{k}"])
    result = frozenset(s)
    assert len(result) == red.r
    if not is_incidence_generator(red.graph, result):
        raise AssertionError("constructed set failed the generator check")
    return result


def basis_to_assignment(red, s):
    """Satisfying assignment extracted from a size-r incidence generator."""
    s = frozenset(s)
    if len(s) != red.r:
        raise ValueError(f"not a tight basis: |S| = {len(s)}, r = {red.r}")
    if not is_incidence_generator(red.graph, s):
        raise ValueError("not an incidence generator")
    f = red.formula
    lab = red.labels
    t = {i: lab[f"T_{i}"] not in s for i in range(1, f.num_vars + 1)}
    bad = _check_assignment(f, t)
    if bad:
        raise AssertionError(f"extraction failed: clause {bad} unsatisfied")
    return t


def verify_claims(red, s):
    """Per-gadget membership counts of a generator, with the structural
    lower bounds (>= 4 per truth gadget, >= 8 per clause gadget)."""
    s = frozenset(s)
    if not is_incidence_generator(red.graph, s):
        raise ValueError("not an incidence generator")
    f = red.formula
    report = {"truth_gadgets": [], "clause_gadgets": [], "ok": True}
    for i in range(1, f.num_vars + 1):
        base = TRUTH_GADGET_SIZE * (i - 1)
        count = sum(1 for v in range(base, base + TRUTH_GADGET_SIZE)
                    if v in s)
        report["truth_gadgets"].append(count)
        if count < 4:
            report["ok"] = False
    clause_base = TRUTH_GADGET_SIZE * f.num_vars
    for j in range(len(f.clauses)):
        base = clause_base + CLAUSE_GADGET_SIZE * j
        count = sum(1 for v in range(base, base + CLAUSE_GADGET_SIZE)
                    if v in s)
        report["clause_gadgets"].append(count)
        if count < 8:
            report["ok"] = False
    return report


# --- tiny DPLL, used by tests and fixtures only ---------------------------

def satisfying_assignment(f):
    """First satisfying assignment by DPLL, or None if unsatisfiable."""

    def dpll(clauses, assign):
        while True:
            unit = next((cl[0] for cl in clauses if len(cl) == 1), None)
            if unit is None:
                break
            clauses, assign = _propagate(clauses, assign, unit)
            if clauses is None:
                return None
        if not clauses:
            return assign
        lit = clauses[0][0]
        for choice in (lit, -lit):
            nxt, nass = _propagate(clauses, assign, choice)
            if nxt is not None:
                res = dpll(nxt, nass)
                if res is not None:
                    return res
        return None

    def _propagate(clauses, assign, lit):
        nass = dict(assign)
        nass[abs(lit)] = lit > 0
        out = []
        for cl in clauses:
            if lit in cl:
                continue
            reduced = tuple(l for l in cl if l != -lit)
            if not reduced:
                return None, None
            out.append(reduced)
        return out, nass

    assign = dpll([tuple(cl) for cl in f.clauses], {})
    if assign is None:
        return None
    return {i: assign.get(i, True) for i in range(1, f.num_vars + 1)}


def is_satisfiable(f):
    return satisfying_assignment(f) is not None
