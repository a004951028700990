"""Instance-file schema, random instance generation and JSON helpers.

An instance file is a JSON object:

    {
      "bundle": {"rank": 4, "degree": 6, "genus": 0,
                 "hn": [{"rank": 1, "degree": 3}, {"rank": 3, "degree": 3}]},
      "ci": [{"k": 2, "y": 1}, {"k": 2, "y": 0}],
      "h": 1,
      "twist": 0
    }

genus, hn, h and twist are optional.  All numbers in input files are
integers; rationals only ever appear in output, serialized as exact "p/q"
strings.  A contact file for the stability command instead holds a
filtration and two contact data:

    {"filtration": {"n": 3, "weights": [1, 1, 1, 1]},
     "contacts": [{"dim": 2, "deg": 2, "e": 6}, {"dim": 2, "deg": 2, "e": 6}]}
"""

from __future__ import annotations

import dataclasses
import enum
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .chowring import AmbientData, CompleteIntersectionSpec
from .cones import HNData
from .stability import ContactDatum, WeightedFiltration

# documented sampling ranges for the randomized sweeps
RANK_RANGE = (3, 8)
DEGREE_RANGE = (-20, 20)
FIBRE_DEGREE_RANGE = (2, 5)
TWIST_RANGE = (-10, 10)


@dataclass(frozen=True)
class Instance:
    ambient: AmbientData
    ci: CompleteIntersectionSpec
    hn: HNData | None = None
    h: int | None = None
    twist: int | None = None


def _require_int(payload, key: str, where: str) -> int:
    if key not in payload:
        raise ValueError(f"missing '{key}' in {where}")
    value = payload[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"'{key}' in {where} must be an integer, got {value!r}")
    return value


def _optional_int(payload, key: str, where: str) -> int | None:
    if key not in payload or payload[key] is None:
        return None
    return _require_int(payload, key, where)


def parse_instance(payload) -> Instance:
    """Validate a decoded instance file; raises ValueError on any defect."""
    if not isinstance(payload, dict):
        raise ValueError("instance file must be a JSON object")
    bundle = payload.get("bundle")
    if not isinstance(bundle, dict):
        raise ValueError("missing 'bundle' object")
    rank = _require_int(bundle, "rank", "bundle")
    degree = _require_int(bundle, "degree", "bundle")
    genus = _optional_int(bundle, "genus", "bundle") or 0
    ambient = AmbientData(rank, degree, genus)

    ci = payload.get("ci")
    if not isinstance(ci, list) or not ci:
        raise ValueError("missing or empty 'ci' list")
    pairs = []
    for i, entry in enumerate(ci):
        if not isinstance(entry, dict):
            raise ValueError(f"ci[{i}] must be an object with 'k' and 'y'")
        pairs.append(
            (_require_int(entry, "k", f"ci[{i}]"), _require_int(entry, "y", f"ci[{i}]"))
        )
    spec = CompleteIntersectionSpec(tuple(pairs))
    if spec.codim > rank - 1:
        raise ValueError(
            f"{spec.codim} hypersurfaces exceed the fibre dimension {rank - 1}"
        )

    hn = None
    if bundle.get("hn") is not None:
        raw = bundle["hn"]
        if not isinstance(raw, list) or not raw:
            raise ValueError("'hn' must be a non-empty list of pieces")
        pieces = []
        for i, piece in enumerate(raw):
            if not isinstance(piece, dict):
                raise ValueError(f"hn[{i}] must be an object with 'rank' and 'degree'")
            pieces.append(
                (
                    _require_int(piece, "rank", f"hn[{i}]"),
                    _require_int(piece, "degree", f"hn[{i}]"),
                )
            )
        hn = HNData.from_rank_degree_pairs(pieces)
        if hn.rank != rank:
            raise ValueError(f"hn ranks sum to {hn.rank}, bundle rank is {rank}")
        if hn.degree != degree:
            raise ValueError(f"hn degrees sum to {hn.degree}, bundle degree is {degree}")

    h = _optional_int(payload, "h", "instance")
    if h is not None and h < 1:
        raise ValueError(f"'h' must be >= 1, got {h}")
    twist = _optional_int(payload, "twist", "instance")
    return Instance(ambient=ambient, ci=spec, hn=hn, h=h, twist=twist)


def load_instance(path) -> Instance:
    return parse_instance(_load_json(path))


def parse_contact_problem(payload) -> tuple[WeightedFiltration, ContactDatum, ContactDatum]:
    """Validate a decoded contact file: one filtration, exactly two contact data."""
    if not isinstance(payload, dict):
        raise ValueError("contact file must be a JSON object")
    filt = payload.get("filtration")
    if not isinstance(filt, dict):
        raise ValueError("missing 'filtration' object")
    n = _require_int(filt, "n", "filtration")
    weights = filt.get("weights")
    if not isinstance(weights, list):
        raise ValueError("missing 'weights' list in filtration")
    for i, w in enumerate(weights):
        if isinstance(w, bool) or not isinstance(w, int):
            raise ValueError(f"weights[{i}] must be an integer, got {w!r}")
    filtration = WeightedFiltration(n, tuple(Fraction(w) for w in weights))

    contacts = payload.get("contacts")
    if not isinstance(contacts, list) or len(contacts) != 2:
        raise ValueError("'contacts' must be a list of exactly two records")
    data = []
    for i, record in enumerate(contacts):
        if not isinstance(record, dict):
            raise ValueError(f"contacts[{i}] must be an object")
        dim = _require_int(record, "dim", f"contacts[{i}]")
        if dim > n:
            raise ValueError(f"contacts[{i}] dimension {dim} exceeds ambient {n}")
        data.append(
            ContactDatum(
                dim=dim,
                deg=_require_int(record, "deg", f"contacts[{i}]"),
                contact=Fraction(_require_int(record, "e", f"contacts[{i}]")),
            )
        )
    return filtration, data[0], data[1]


def load_contact_problem(path):
    return parse_contact_problem(_load_json(path))


def _load_json(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc


def instance_payload(instance: Instance) -> dict:
    """Round-trippable JSON form of an instance (for reports and failure dumps)."""
    bundle: dict = {"rank": instance.ambient.rank, "degree": instance.ambient.degree}
    if instance.ambient.genus:
        bundle["genus"] = instance.ambient.genus
    if instance.hn is not None:
        bundle["hn"] = [
            {"rank": rank, "degree": int(rank * slope)}
            for rank, slope in instance.hn.pieces
        ]
    payload: dict = {
        "bundle": bundle,
        "ci": [{"k": k, "y": y} for k, y in instance.ci.pairs],
    }
    if instance.h is not None:
        payload["h"] = instance.h
    if instance.twist is not None:
        payload["twist"] = instance.twist
    return payload


# ---------------------------------------------------------------------------
# random generation (deterministic given the Random instance)

def random_instance(rng: random.Random, with_hn: bool = True) -> Instance:
    """One instance from the documented sweep ranges."""
    r = rng.randint(*RANK_RANGE)
    d = rng.randint(*DEGREE_RANGE)
    c = rng.randint(1, r - 1)
    pairs = tuple(
        (rng.randint(*FIBRE_DEGREE_RANGE), rng.randint(*TWIST_RANGE)) for _ in range(c)
    )
    hn = random_hn_for(rng, r, d) if with_hn else None
    return Instance(AmbientData(r, d), CompleteIntersectionSpec(pairs), hn=hn)


def random_hn_for(
    rng: random.Random, rank: int, degree: int, max_pieces: int = 4, attempts: int = 40
) -> HNData:
    """Random filtration data with the given total rank and degree.

    Rejection-samples integer piece degrees until the slopes strictly
    decrease; falls back to the semistable filtration, which always exists.
    """
    for _ in range(attempts):
        pieces = rng.randint(1, min(max_pieces, rank))
        if pieces == 1:
            break
        cuts = sorted(rng.sample(range(1, rank), pieces - 1))
        ranks = [b - a for a, b in zip([0] + cuts, cuts + [rank])]
        degs = [rng.randint(*DEGREE_RANGE) for _ in range(pieces - 1)]
        degs.append(degree - sum(degs))
        slopes = [Fraction(dd, rr) for rr, dd in zip(ranks, degs)]
        if all(a > b for a, b in zip(slopes, slopes[1:])):
            return HNData.from_rank_degree_pairs(tuple(zip(ranks, degs)))
    return HNData.semistable(rank, degree)


def random_hn(rng: random.Random, max_pieces: int = 4, attempts: int = 40) -> HNData:
    """Random filtration data with free total rank in the sweep range.

    Pieces are drawn with integer degrees and sorted by slope; draws with
    tied slopes are rejected.
    """
    for _ in range(attempts):
        rank = rng.randint(*RANK_RANGE)
        pieces = rng.randint(1, min(max_pieces, rank))
        if pieces == 1:
            return HNData.semistable(rank, rng.randint(*DEGREE_RANGE))
        cuts = sorted(rng.sample(range(1, rank), pieces - 1))
        ranks = [b - a for a, b in zip([0] + cuts, cuts + [rank])]
        degs = [rng.randint(*DEGREE_RANGE) for _ in range(pieces)]
        slopes = sorted((Fraction(dd, rr) for rr, dd in zip(ranks, degs)), reverse=True)
        if len(set(slopes)) != pieces:
            continue
        by_slope = sorted(zip(ranks, degs), key=lambda p: Fraction(p[1], p[0]), reverse=True)
        return HNData.from_rank_degree_pairs(tuple(by_slope))
    return HNData.semistable(rng.randint(*RANK_RANGE), rng.randint(*DEGREE_RANGE))


# ---------------------------------------------------------------------------
# JSON rendering of results

def rational_str(value) -> str:
    """Exact 'p/q' (or 'p') form; never a decimal."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def to_jsonable(obj):
    """Recursively convert reports to JSON-safe values, Fractions as strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)
        }
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(item) for item in obj]
    if isinstance(obj, float):
        raise TypeError("floats must never reach report serialization")
    raise TypeError(f"cannot serialize {type(obj).__name__}")
