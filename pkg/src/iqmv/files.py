"""
Problem files, report files and histogram CSV export.

A problem file is a JSON object::

    {"A_m": [[...], ...], "Delta": [[...], ...], "epsilon": 0.3,
     "qaoa": {"p": 2, "restarts": 10, "seed": 7, ...}}

or with ``"A_lower"``/``"A_upper"`` in place of ``"A_m"``/``"Delta"``. An
optional ``"method"`` field selects ``brute``, ``qaoa`` or ``both``.
Floats are written with Python's shortest round-trip repr, so reading a
report back reproduces every number bit for bit.
"""
import dataclasses
import json
from pathlib import Path

import numpy as np

from .errors import ProblemFormatError
from .optimizer import QaoaConfig
from .report import Decision, RadiusReport
from .simulator import CountsHistogram
from .verifier import ProblemSpec

QAOA_FIELDS = tuple(f.name for f in dataclasses.fields(QaoaConfig))


def qaoa_config_from_dict(block, **overrides):
    block = dict(block or {})
    unknown = set(block) - set(QAOA_FIELDS)
    if unknown:
        raise ProblemFormatError(f"unknown qaoa fields: {sorted(unknown)}")
    block.update({k: v for k, v in overrides.items() if v is not None})
    for name in ("p", "restarts", "max_iterations", "shots", "seed"):
        if name in block:
            block[name] = int(block[name])
    return QaoaConfig(**block)


def problem_from_dict(data, epsilon=None, method=None, **qaoa_overrides):
    if not isinstance(data, dict):
        raise ProblemFormatError("problem must be a JSON object")
    centered = "A_m" in data or "Delta" in data
    bounded = "A_lower" in data or "A_upper" in data
    if centered == bounded:
        raise ProblemFormatError("give exactly one of (A_m, Delta) or (A_lower, A_upper)")
    kwargs = {
        "method": method or data.get("method", "brute"),
        "qaoa": qaoa_config_from_dict(data.get("qaoa"), **qaoa_overrides),
    }
    eps = data.get("epsilon") if epsilon is None else epsilon
    if eps is not None:
        kwargs["epsilon"] = float(eps)
    try:
        if centered:
            return ProblemSpec(np.array(data["A_m"], dtype=float),
                               np.array(data["Delta"], dtype=float), **kwargs)
        return ProblemSpec.from_bounds(np.array(data["A_lower"], dtype=float),
                                       np.array(data["A_upper"], dtype=float), **kwargs)
    except KeyError as exc:
        raise ProblemFormatError(f"missing field {exc.args[0]!r}") from None


def load_problem(path, **overrides):
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ProblemFormatError(f"{path}: {exc}") from None
    return problem_from_dict(data, **overrides)


def problem_to_dict(spec):
    return {
        "A_m": spec.A_m.tolist(),
        "Delta": spec.Delta.tolist(),
        "epsilon": spec.epsilon,
        "method": spec.method,
        "qaoa": dataclasses.asdict(spec.qaoa),
    }


def _plain(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Decision):
        return value.value
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


def report_to_dict(report):
    return {f.name: _plain(getattr(report, f.name)) for f in dataclasses.fields(report)}


def report_from_dict(data):
    data = dict(data)
    for name in ("z_star", "y_star"):
        data[name] = np.array(data[name], dtype=int)
    for name in ("beta", "gamma", "witness"):
        if data.get(name) is not None:
            data[name] = np.array(data[name], dtype=float)
    if data.get("decision") is not None:
        data["decision"] = Decision(data["decision"])
    return RadiusReport(**data)


def dumps_report(report):
    return json.dumps(report_to_dict(report), indent=2)


def write_report(report, path):
    Path(path).write_text(dumps_report(report) + "\n")


def read_report(path):
    return report_from_dict(json.loads(Path(path).read_text()))


def histogram_csv(counts, shots=None):
    if not isinstance(counts, CountsHistogram):
        counts = CountsHistogram(shots if shots is not None else sum(counts.values()), dict(counts))
    return counts.to_csv()


def write_histogram(counts, path):
    Path(path).write_text(histogram_csv(counts))


def read_histogram(path):
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0].strip() != "bitstring,count":
        raise ProblemFormatError(f"{path}: missing 'bitstring,count' header")
    counts = {}
    for line in lines[1:]:
        if line.strip():
            bits, count = line.split(",")
            counts[bits.strip()] = int(count)
    return CountsHistogram(sum(counts.values()), counts)
