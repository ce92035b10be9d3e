"""Rendering of results as human text or as a structured record format.

The structured format is line oriented: each line is ``key: value`` where a
value is either a scalar or a bracketed, ``", "``-separated list.  Records
are separated by a blank line.  Every domain element is written in the
package's text grammar, so a record can be parsed back and re-rendered
byte-for-byte.
"""

from .errors import InputError
from .multipoly import Term, format_term, parse_polynomial
from .nonvanishing import Certificate, GridSpec


def dump_record(pairs):
    lines = []
    for key, value in pairs:
        if isinstance(value, (list, tuple)):
            value = "[" + ", ".join(map(str, value)) + "]"
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def dump_records(records):
    return "\n".join(dump_record(r) for r in records)


def load_records(text):
    records, current = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            if current:
                records.append(current)
                current = []
            continue
        key, sep, value = line.partition(": ")
        if not sep:
            raise InputError(f"line {lineno}: expected 'key: value'")
        if value.startswith("[") and value.endswith("]"):
            inner = value[1:-1]
            value = inner.split(", ") if inner else []
        current.append((key, value))
    if current:
        records.append(current)
    return records


def load_record(text):
    records = load_records(text)
    if len(records) != 1:
        raise InputError(f"expected one record, found {len(records)}")
    return records[0]


def _bool(flag):
    return "true" if flag else "false"


def _grid_pairs(grid):
    return [(f"axis.{k}", list(axis.points)) for k, axis in enumerate(grid.axes, 1)]


def certificate_record(cert):
    c, exps = cert.term
    return [
        ("kind", "certificate"),
        ("domain", cert.polynomial.domain.name),
        ("polynomial", str(cert.polynomial)),
        *_grid_pairs(cert.grid),
        ("term", format_term(c, exps)),
        ("term.coefficient", str(c)),
        ("term.exponents", list(exps)),
        ("r", list(cert.r_values)),
        ("phi", str(cert.phi)),
        ("predicted", str(cert.predicted)),
        ("phi_grid", "skipped" if cert.phi_grid is None else str(cert.phi_grid)),
        ("grid_size", str(cert.grid_size)),
        ("witness", "none" if cert.witness is None else list(cert.witness)),
        ("witness_value", "none" if cert.witness_value is None else str(cert.witness_value)),
        ("certified", _bool(cert.certified)),
    ]


def certificate_from_record(pairs):
    """Rebuild a :class:`Certificate` (without lambda families) from a record."""
    from .ring import get_domain

    data = dict(pairs)
    if data.get("kind") != "certificate":
        raise InputError("not a certificate record")
    domain = get_domain(data["domain"])
    axes = [data[k] for k, _ in pairs if k.startswith("axis.")]
    grid = GridSpec([[domain.parse(s) for s in axis] for axis in axes], domain)
    f = parse_polynomial(data["polynomial"], domain, grid.nvars)
    el = domain.parse
    witness = None if data["witness"] == "none" else tuple(el(s) for s in data["witness"])
    return Certificate(
        polynomial=f,
        grid=grid,
        term=Term(el(data["term.coefficient"]), tuple(int(e) for e in data["term.exponents"])),
        r_values=tuple(el(s) for s in data["r"]),
        phi=el(data["phi"]),
        predicted=el(data["predicted"]),
        phi_grid=None if data["phi_grid"] == "skipped" else el(data["phi_grid"]),
        witness=witness,
        witness_value=None if data["witness_value"] == "none" else el(data["witness_value"]),
    )


def certificate_text(cert):
    c, exps = cert.term
    lines = [
        f"f = {cert.polynomial}",
        f"leading term: {format_term(c, exps)}  (c = {c}, exponents {tuple(exps)})",
    ]
    for k, (axis, r) in enumerate(zip(cert.grid.axes, cert.r_values), 1):
        lines.append(f"axis {k}: S = {{{', '.join(map(str, axis))}}}, r = {r}")
    lines.append(f"phi(f) by products = {cert.phi}")
    if cert.phi_grid is not None:
        lines.append(f"phi(f) by grid sum = {cert.phi_grid}")
    else:
        lines.append("phi(f) by grid sum: skipped (grid too large)")
    lines.append(f"c * prod r_k       = {cert.predicted}")
    lines.append(f"grid size: {cert.grid_size}")
    if cert.witness is not None:
        lines.append(f"witness: ({', '.join(map(str, cert.witness))}), f = {cert.witness_value}")
    lines.append("certified: " + ("yes" if cert.certified else "no"))
    return "\n".join(lines) + "\n"


def lambda_record(fam, report):
    return [
        ("kind", "lambda"),
        ("domain", fam.points.domain.name),
        ("set", list(fam.points)),
        ("lambda", list(fam.coefficients)),
        ("cofactor_of", [f"V({i};{j})" for i, j in fam.cofactor_indices]),
        ("r", str(fam.top_value)),
        ("power_sums", [c.actual for c in report.checks]),
        ("expected", [c.expected for c in report.checks]),
        ("verified", _bool(report.ok)),
    ]


def lambda_text(fam, report):
    m = fam.size
    lines = [
        f"S = {{{', '.join(map(str, fam.points))}}}",
        f"lambda = {', '.join(map(str, fam.coefficients))}",
        f"  (cofactors of row {m} of the {m}x{m} Vandermonde matrix)",
        f"r = det V = {fam.top_value}",
    ]
    for c in report.checks:
        mark = "ok" if c.passed else "FAILED"
        lines.append(f"  sum lambda*s^{c.exponent} = {c.actual}  (expected {c.expected})  {mark}")
    lines.append("verified: " + ("yes" if report.ok else "no"))
    return "\n".join(lines) + "\n"


def phi_record(f, grid, fams, fast, by_grid):
    return [
        ("kind", "phi"),
        ("domain", f.domain.name),
        ("polynomial", str(f)),
        *_grid_pairs(grid),
        ("r", [fam.top_value for fam in fams]),
        ("phi_fast", str(fast)),
        ("phi_grid", "skipped" if by_grid is None else str(by_grid)),
        ("agree", "unchecked" if by_grid is None else _bool(by_grid == fast)),
        ("grid_size", str(grid.size)),
    ]


def phi_text(f, grid, fams, fast, by_grid):
    lines = [f"f = {f}", f"phi(f) by products = {fast}"]
    if by_grid is None:
        lines.append("phi(f) by grid sum: skipped (grid too large)")
    else:
        mark = "==" if by_grid == fast else "!="
        lines.append(f"phi(f) by grid sum = {by_grid}  ({mark} products)")
    return "\n".join(lines) + "\n"


def witness_record(f, grid, hit):
    point, value = hit if hit is not None else (None, None)
    return [
        ("kind", "witness"),
        ("domain", f.domain.name),
        ("polynomial", str(f)),
        *_grid_pairs(grid),
        ("grid_size", str(grid.size)),
        ("witness", "none" if point is None else list(point)),
        ("witness_value", "none" if value is None else str(value)),
    ]


def witness_text(f, grid, hit):
    if hit is None:
        return f"f = {f} vanishes on all {grid.size} grid points\nwitness: none\n"
    point, value = hit
    return f"f = {f}\nwitness: ({', '.join(map(str, point))}), f = {value}\n"
