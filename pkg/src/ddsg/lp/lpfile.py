"""Write models in the CPLEX-style ``.lp`` text layout for debugging."""
from __future__ import annotations

from pathlib import Path

from .model import LpModel, Sense


def _num(a):
    return str(a) if a.denominator == 1 else repr(float(a))


def _terms(coeffs, names):
    out = []
    for j, a in sorted(coeffs.items()):
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        out.append(f"{sign} {names[j]}" if mag == 1 else f"{sign} {_num(mag)} {names[j]}")
    if not out:
        return "0"
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else text


def format_lp(model: LpModel) -> str:
    names = model.names
    lines = [f"\\ {model.name}", "Maximize", " obj: " + _terms(dict(enumerate(model.objective)), names),
             "Subject To"]
    ops = {Sense.LE: "<=", Sense.EQ: "=", Sense.GE: ">="}
    for con in model.constraints:
        lines.append(f" {con.name}: {_terms(con.coeffs, names)} {ops[con.sense]} {_num(con.rhs)}")
    lines.append("Bounds")
    for j, name in enumerate(names):
        lo, hi = model.lower[j], model.upper[j]
        if hi is None:
            lines.append(f" {name} >= {_num(lo)}")
        else:
            lines.append(f" {_num(lo)} <= {name} <= {_num(hi)}")
    binaries = [names[j] for j, flag in enumerate(model.integer) if flag]
    if binaries:
        lines.append("Binaries")
        lines.append(" " + " ".join(binaries))
    lines.append("End")
    return "\n".join(lines) + "\n"


def dump_model(model: LpModel, directory) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    index = len(list(directory.glob("*.lp")))
    path = directory / f"{index:05d}_{model.name}.lp"
    path.write_text(format_lp(model))
    return path
