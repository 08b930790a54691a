"""Binary-classifier benchmarking with k-fold CV and a genetic pipeline search."""

import json

from . import _core
from ._core import DatasetError, Error, InvalidArgument, kfold_plan, load_csv, recommend

__all__ = [
    "DatasetError",
    "Error",
    "InvalidArgument",
    "cross_validate",
    "evolve",
    "fit_predict",
    "kfold_plan",
    "load_csv",
    "recommend",
    "run_benchmark",
    "summarize",
]

__version__ = _core.__version__


def _pipeline_json(pipeline):
    # Accepts "knn", {"kind": "knn", "params": {...}} or a full pipeline dict.
    if isinstance(pipeline, str):
        pipeline = {"classifier": {"kind": pipeline}}
    elif "classifier" not in pipeline:
        pipeline = {"classifier": pipeline}
    return json.dumps(pipeline)


def summarize(features, labels):
    return json.loads(_core.summarize(features, labels))


def fit_predict(pipeline, features, labels, test_features, seed=0):
    return _core.fit_predict(_pipeline_json(pipeline), features, labels, test_features, seed)


def cross_validate(pipeline, features, labels, k=5, shuffle=False, seed=0, threads=1):
    return json.loads(_core.cross_validate(_pipeline_json(pipeline), features, labels, k, shuffle, seed, threads))


def evolve(features, labels, k=5, shuffle=False, seed=0, generations=5, population=20, threads=0):
    return json.loads(_core.evolve(features, labels, k, shuffle, seed, generations, population, threads))


def run_benchmark(data, k=5, seed=0, shuffle=False, classifiers=None, run_ga=True, generations=5, population=20,
                  out=None, threads=0, has_header=True):
    return json.loads(_core.run_benchmark(str(data), k, seed, shuffle, classifiers, run_ga, generations, population,
                                          None if out is None else str(out), threads, has_header))
