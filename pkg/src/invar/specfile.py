"""Group specification files: one JSON document per group.

Finite matrix groups carry a field block, a dimension, and generator
matrices whose entries use the scalar grammar; algebraic groups carry
group variables, vanishing-ideal generators, an action matrix of
polynomials in the group variables, and the linear_reductive flag.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from typing import Union

from .algebraic import AlgebraicGroupSpec
from .errors import ParseError
from .fields import field_from_config
from .groups import DEFAULT_CLOSURE_CAP, FiniteMatrixGroup, close_group
from .linalg import Matrix
from .polynomials import PolynomialRing


@dataclass
class LoadedSpec:
    kind: str  # finite_matrix | algebraic
    label: str
    group: Union[FiniteMatrixGroup, AlgebraicGroupSpec]
    digest: str
    path: str


def parse_group_config(cfg: dict, cap: int = DEFAULT_CLOSURE_CAP):
    kind = cfg.get("kind")
    if kind == "finite_matrix":
        return _parse_finite(cfg, cap)
    if kind == "algebraic":
        return _parse_algebraic(cfg)
    raise ParseError(f"unknown group kind {kind!r}")


def _parse_finite(cfg: dict, cap: int) -> FiniteMatrixGroup:
    field = field_from_config(cfg["field"])
    n = int(cfg["dimension"])
    gens = []
    for rows in cfg["generators"]:
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ParseError(f"generator matrix is not {n}x{n}")
        gens.append(Matrix(field, [[field.parse(e) for e in row] for row in rows]))
    return close_group(gens, field=field, cap=cap, label=cfg.get("label", ""))


def _parse_algebraic(cfg: dict) -> AlgebraicGroupSpec:
    field = field_from_config(cfg["field"])
    group_vars = tuple(cfg.get("group_vars", ()))
    zring = PolynomialRing(field, group_vars)
    ideal_gens = [zring.parse(t) for t in cfg.get("ideal_gens", ())]
    n = int(cfg["dimension"])
    rows = cfg["action_matrix"]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ParseError(f"action matrix is not {n}x{n}")
    action = [[zring.parse(e) for e in row] for row in rows]
    return AlgebraicGroupSpec(
        field=field,
        group_vars=group_vars,
        ideal_gens=ideal_gens,
        n=n,
        action_matrix=action,
        linear_reductive=bool(cfg.get("linear_reductive", False)),
        label=cfg.get("label", ""),
    )


def load_spec_file(path: str, cap: int = DEFAULT_CLOSURE_CAP) -> LoadedSpec:
    with open(path, "rb") as fh:
        raw = fh.read()
    digest = hashlib.sha256(raw).hexdigest()
    try:
        cfg = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    group = parse_group_config(cfg, cap=cap)
    return LoadedSpec(
        kind=cfg["kind"],
        label=cfg.get("label", ""),
        group=group,
        digest=digest,
        path=path,
    )


def fixture_path(name: str) -> str:
    """Absolute path of a bundled example spec file, e.g. 'd8'."""
    if not name.endswith(".json"):
        name += ".json"
    ref = resources.files("invar") / "fixtures" / name
    return str(ref)
