import json

from flask import request as flask_request

from functions.igraph_api.main import igraph_api


def _json(resp):
    return json.loads(resp.get_data(as_text=True) or "{}")


def _get(app, url):
    with app.test_request_context(url, method="GET"):
        return igraph_api(flask_request)


def _post(app, url, body):
    with app.test_request_context(url, method="POST", json=body):
        return igraph_api(flask_request)


def test_index_lists_endpoints(app):
    resp = _get(app, "/")
    assert resp.status_code == 200
    assert _json(resp)["service"] == "igraph_api"
    assert resp.headers["Access-Control-Allow-Origin"] == "*"


def test_family_graph(app):
    resp = _get(app, "/families/bracelet/3")
    assert resp.status_code == 200
    body = _json(resp)
    assert body["n"] == 15
    assert body["labels"][0] == "{0,2}"


def test_predicted_igraphs(app):
    body = _json(_get(app, "/predicted/cycle/11"))
    assert body["n"] == 11
    assert len(body["edges"]) == 11

    body = _json(_get(app, "/predicted/path/10"))
    assert body["n"] == 10
    assert body["labels"][0] == "(1,2)"


def test_counts(app):
    body = _json(_get(app, "/counts/cycle/13"))
    assert body == {"family": "cycle", "n": 13, "closed_form": 26, "generating_function": 26, "enumerated": 26}

    body = _json(_get(app, "/counts/path/100"))
    assert body["closed_form"] == 595
    assert body["generating_function"] == 595
    assert body["enumerated"] is None


def test_invalid_parameters(app):
    resp = _get(app, "/counts/cycle/2")
    assert resp.status_code == 400
    assert _json(resp)["code"] == "INVALID_PARAMETER"

    resp = _get(app, "/predicted/path/ten")
    assert resp.status_code == 400

    resp = _get(app, "/families/wheel/4")
    assert resp.status_code == 400

    resp = _get(app, "/counts/path/5000")
    assert resp.status_code == 413
    assert _json(resp)["code"] == "TOO_LARGE"


def test_not_found_and_method(app):
    assert _get(app, "/nope").status_code == 404
    assert _get(app, "/counts/cycle").status_code == 404
    assert _get(app, "/predicted/star/4").status_code == 404
    assert _get(app, "/igraphs").status_code == 405
    assert _post(app, "/counts/cycle/5", {}).status_code == 405


def test_build_igraph_from_family(app):
    resp = _post(app, "/igraphs", {"family": "cycle:5"})
    assert resp.status_code == 200
    body = _json(resp)
    assert len(body["isets"]) == 5
    assert len(body["edges"]) == 5


def test_build_igraph_from_document(app):
    resp = _post(app, "/igraphs", {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]})
    assert resp.status_code == 200
    assert _json(resp)["isets"] == [[0, 2], [0, 3], [1, 3]]


def test_build_igraph_errors(app):
    resp = _post(app, "/igraphs", {"n": 2, "edges": [[0, 5]]})
    assert resp.status_code == 400
    body = _json(resp)
    assert body["code"] == "PARSE_ERROR"
    assert body["position"] == "edges[0]"

    resp = _post(app, "/igraphs", {"family": "cycle:30"})
    assert resp.status_code == 413

    resp = _post(app, "/igraphs", {"family": "c"})
    assert resp.status_code == 400
    assert _json(resp)["error"] == "Validation error"


def test_invalid_json_body(app):
    with app.test_request_context("/igraphs", method="POST", data="{bad", content_type="application/json"):
        resp = igraph_api(flask_request)
    assert resp.status_code == 400
    assert _json(resp)["code"] == "PARSE_ERROR"

    resp = _post(app, "/hamilton", [1, 2])
    assert resp.status_code == 400


def test_hamilton_cycle_targets(app):
    body = _json(_post(app, "/hamilton", {"target": "cycle:13"}))
    assert body["status"] == "hamiltonian"
    assert body["predicted"] == "hamiltonian"
    assert len(body["witness"]) == 26

    body = _json(_post(app, "/hamilton", {"target": "cycle:16"}))
    assert body["status"] == "neither"
    assert body["obstruction"]["kind"] == "bipartite_imbalance"

    body = _json(_post(app, "/hamilton", {"target": "cycle:19"}))
    assert body["status"] == "traceable_only"
    assert body["obstruction"]["kind"] == "forced_subcycle"


def test_hamilton_other_targets(app):
    body = _json(_post(app, "/hamilton", {"target": "bracelet:2"}))
    assert body["status"] == "hamiltonian"
    assert body["order"] == 7

    body = _json(_post(app, "/hamilton", {"target": "path:7"}))
    # i-graph of P_7 is the worn lattice on 6 vertices
    assert body["order"] == 6

    resp = _post(app, "/hamilton", {"target": "cycle:13", "budget": 0})
    assert resp.status_code == 400
    assert _json(resp)["error"] == "Validation error"


def test_seed_order_limit_from_env(app, monkeypatch):
    monkeypatch.setenv("IGRAPH_API_MAX_SEED_ORDER", "10")
    assert _post(app, "/hamilton", {"target": "cycle:13"}).status_code == 413
    assert _json(_get(app, "/counts/cycle/13"))["enumerated"] is None


def test_hamilton_graph_order_limit(app, monkeypatch):
    # bracelet:40 has 40*121/2 = 2420 vertices
    resp = _post(app, "/hamilton", {"target": "bracelet:40"})
    assert resp.status_code == 413
    assert _json(resp)["code"] == "TOO_LARGE"

    monkeypatch.setenv("IGRAPH_API_MAX_GRAPH_ORDER", "5")
    assert _post(app, "/hamilton", {"target": "bracelet:2"}).status_code == 413
    assert _post(app, "/hamilton", {"target": "lattice:2"}).status_code == 413
    assert _post(app, "/hamilton", {"target": "path:7"}).status_code == 413


def test_options_preflight(app):
    with app.test_request_context("/igraphs", method="OPTIONS"):
        resp = igraph_api(flask_request)
    assert resp.status_code == 204
