"""Instance search and the JSON file formats."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .errors import InputFormatError, InstanceError
from .exact import XY, Poly, coeff, format_coeff, from_literal, to_literal


@dataclass(frozen=True)
class InstanceSearchParams:
    bound: int = 5
    attempts: int = 10000
    seed: int = 0
    a: object = 0
    b: object = 1

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("coefficient bound must be >= 1")
        if self.attempts < 1:
            raise ValueError("attempts must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if coeff(self.a) == coeff(self.b):
            raise ValueError("offsets a and b must differ")


def random_conic(rng: random.Random, bound: int) -> Poly:
    return XY.from_dict({(i, j): rng.randint(-bound, bound)
                         for i in range(3) for j in range(3 - i)})


def generate_instance(params: InstanceSearchParams = InstanceSearchParams()):
    """Search F = l1 l2 q - m**2 over random integer conics q, m; both lines
    are bitangent by construction. Returns (instance, attempts used)."""
    from .certificate import bitangent_points_distinct, build_loci, certify_bitangent, validate_quartic
    from .foliation import QuarticInstance

    rng = random.Random(params.seed)
    X, Y = XY.gens()
    lines = (X + Y + coeff(params.a)) * (X + Y + coeff(params.b))
    for attempt in range(1, params.attempts + 1):
        q, m = random_conic(rng, params.bound), random_conic(rng, params.bound)
        F = lines * q - m ** 2
        if F.total_degree() != 4:
            continue
        inst = QuarticInstance(F, params.a, params.b, None,
                               {"q": to_literal(q), "m": to_literal(m)})
        if not validate_quartic(inst).ok:
            continue
        if not all(certify_bitangent(inst, w).ok for w in ("l1", "l2")):
            continue
        if not bitangent_points_distinct(inst):
            continue
        try:
            build_loci(inst)
        except InstanceError:
            continue
        return inst, attempt
    raise InstanceError(f"no valid instance in {params.attempts} attempts; "
                        "raise the coefficient bound or the attempt count")


def family_cubic(inst, rng: random.Random, bound: int = 3) -> Poly:
    """A cubic C = F_X + l1 l2 * (linear form); it agrees with F_X on the
    bitangency points."""
    X, Y = XY.gens()
    while True:
        lin = rng.randint(-bound, bound) * X + rng.randint(-bound, bound) * Y + rng.randint(-bound, bound)
        if lin.total_degree() == 1:
            C = inst.F.diff("X") + inst.lines * lin
            if C.total_degree() == 3:
                return C


# -- JSON --------------------------------------------------------------------

def instance_to_dict(inst) -> dict:
    out = {"F": to_literal(inst.F), "a": format_coeff(inst.a), "b": format_coeff(inst.b)}
    if inst.C is not None:
        out["C"] = to_literal(inst.C)
    if inst.construction:
        out["construction"] = inst.construction
    return out


def instance_from_dict(data: dict):
    from .foliation import QuarticInstance

    if not isinstance(data, dict) or "F" not in data:
        raise InputFormatError("instance must be an object with an 'F' polynomial")
    unknown = set(data) - {"F", "a", "b", "C", "construction"}
    if unknown:
        raise InputFormatError(f"unknown instance fields: {sorted(unknown)}")
    try:
        F = from_literal(data["F"])
        C = from_literal(data["C"]) if data.get("C") is not None else None
        a = coeff(str(data.get("a", "0")))
        b = coeff(str(data.get("b", "1")))
    except (TypeError, ValueError) as exc:
        raise InputFormatError(f"malformed instance: {exc}") from exc
    return QuarticInstance(F, a, b, C, data.get("construction"))


def load_instance(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputFormatError(f"cannot read instance {path}: {exc}") from exc
    return instance_from_dict(data)


def dump_instance(inst, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(inst), fh, indent=1)
        fh.write("\n")
