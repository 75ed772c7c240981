import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from commgraph.estimators import FEATURES, GraphInvariantTransformer
from commgraph.graphs import build_shape


def test_features_for_mixed_inputs():
    X = ["K8 + 5*K2", "D18", build_shape("K3")]
    out = GraphInvariantTransformer(graph="raw").fit_transform(X)
    assert out.shape == (3, len(FEATURES))
    assert out[0, :4].tolist() == [18, 33, 402, 1377]
    assert out[2].tolist() == [3, 3, 12, 12, 4, 4, 4, 4]
    assert np.isclose(out[1, 5], 1120 / 17)


def test_params_clone_and_names():
    t = GraphInvariantTransformer(graph="nc", cap=100)
    assert clone(t).get_params() == {"graph": "nc", "cap": 100}
    assert list(t.get_feature_names_out()) == list(FEATURES)


def test_unfitted_and_bad_param():
    with pytest.raises(NotFittedError):
        GraphInvariantTransformer().transform(["K3"])
    with pytest.raises(ValueError):
        GraphInvariantTransformer(graph="bad").fit(["K3"])


def test_in_pipeline():
    pipe = make_pipeline(GraphInvariantTransformer(graph="raw"), StandardScaler())
    out = pipe.fit_transform(["K3", "K4", "K5"])
    assert out.shape == (3, 8) and np.allclose(out.mean(axis=0), 0)
