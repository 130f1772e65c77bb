import json
import logging
import os
from typing import Any, Dict, Tuple

import functions_framework
from flask import Response, make_response
from loguru import logger
from pydantic import ValidationError

logging.basicConfig(level=logging.INFO)


# Optional Sentry
def _is_truthy(v: str | None) -> bool:
    return (v or "").strip().lower() in ("1", "true", "yes", "on")


def _init_sentry() -> None:
    dsn = (os.getenv("SENTRY_DSN") or "").strip()
    if not dsn or _is_truthy(os.getenv("DISABLE_SENTRY")):
        return
    try:
        import sentry_sdk
        from sentry_sdk.integrations.gcp import GcpIntegration

        sentry_sdk.init(dsn=dsn, integrations=[GcpIntegration()], traces_sample_rate=1.0)
    except Exception:
        # Never fail the function due to Sentry init issues.
        return


_init_sentry()

# Support both "run as a package" (relative imports) and "run from this folder" (library vendored next to it).
try:  # pragma: no cover
    from ..igraph_core.errors import IGraphError, InvalidParameterError, TooLargeError
    from ..igraph_core.families import (
        count_cycle_isets,
        count_path_isets,
        cycle_gf_parameters,
        gf_cycle_coefficient,
        path_gf_coefficient,
        path_gf_parameters,
        predicted_cycle_hamiltonicity,
        predicted_cycle_igraph,
        predicted_path_igraph,
    )
    from ..igraph_core.graph_core import Graph, cycle, path
    from ..igraph_core.domination import enumerate_isets
    from ..igraph_core.hamilton import hamiltonian_cycle
    from ..igraph_core.reconfig import build_igraph
    from ..igraph_core.serialization import graph_doc_to_dict, igraph_to_json, parse_graph_payload
    from ..igraph_core.targets import parse_family_spec
    from ..igraph_core.traceability import classify_cycle_igraph
    from .config import get_default_budget, get_max_budget, get_max_graph_order, get_max_seed_order
    from .models import CountsResponse, FamilyRequest, HamiltonRequest
except Exception:  # pragma: no cover
    from igraph_core.errors import IGraphError, InvalidParameterError, TooLargeError
    from igraph_core.families import (
        count_cycle_isets,
        count_path_isets,
        cycle_gf_parameters,
        gf_cycle_coefficient,
        path_gf_coefficient,
        path_gf_parameters,
        predicted_cycle_hamiltonicity,
        predicted_cycle_igraph,
        predicted_path_igraph,
    )
    from igraph_core.graph_core import Graph, cycle, path
    from igraph_core.domination import enumerate_isets
    from igraph_core.hamilton import hamiltonian_cycle
    from igraph_core.reconfig import build_igraph
    from igraph_core.serialization import graph_doc_to_dict, igraph_to_json, parse_graph_payload
    from igraph_core.targets import parse_family_spec
    from igraph_core.traceability import classify_cycle_igraph
    from config import get_default_budget, get_max_budget, get_max_graph_order, get_max_seed_order
    from models import CountsResponse, FamilyRequest, HamiltonRequest

# Predicted families grow quadratically; bound the parameter.
MAX_FAMILY_PARAM = 200

ENDPOINTS = [
    "GET /families/{path|cycle|bracelet|lattice}/{param}",
    "GET /predicted/{path|cycle}/{n}",
    "GET /counts/{path|cycle}/{n}",
    "POST /igraphs  (graph document or {\"family\": \"cycle:5\"})",
    "POST /hamilton  ({\"target\": \"cycle:13\", \"budget\": 1000000})",
]


def _json_response(payload: Any, status: int = 200) -> Response:
    body = payload if isinstance(payload, str) else json.dumps(payload, ensure_ascii=False)
    resp = make_response(body, status)
    resp.headers["Content-Type"] = "application/json; charset=utf-8"
    # CORS (local dev convenience)
    resp.headers["Access-Control-Allow-Origin"] = "*"
    resp.headers["Access-Control-Allow-Methods"] = "GET,POST,OPTIONS"
    resp.headers["Access-Control-Allow-Headers"] = "Content-Type"
    return resp


def _error(message: str, status: int = 400, extra: Dict[str, Any] | None = None) -> Response:
    body: Dict[str, Any] = {"error": message}
    if extra:
        body.update(extra)
    return _json_response(body, status=status)


def _parse_json(request) -> Tuple[Dict[str, Any] | None, Response | None]:
    if not request.data:
        return None, None
    try:
        return request.get_json(silent=False), None
    except Exception:
        return None, _error("Invalid JSON body", 400, {"code": "PARSE_ERROR"})


def _parse_int(raw: str, name: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise InvalidParameterError(f"{name} must be an integer, got {raw!r}") from None


def _check_seed(g: Graph) -> None:
    limit = get_max_seed_order()
    if g.order > limit:
        raise TooLargeError(f"seed graph has {g.order} vertices; this service accepts at most {limit}")


def _check_param(value: int) -> None:
    if value > MAX_FAMILY_PARAM:
        raise TooLargeError(f"parameter {value} exceeds {MAX_FAMILY_PARAM}")


def _check_order(g: Graph) -> None:
    limit = get_max_graph_order()
    if g.order > limit:
        raise TooLargeError(f"graph has {g.order} vertices; Hamilton search accepts at most {limit}")


def _budget(requested: int | None) -> int:
    return min(requested or get_default_budget(), get_max_budget())


def _handle_family(name: str, raw: str) -> Response:
    spec = parse_family_spec(f"{name}:{raw}")
    _check_param(spec.param)
    return _json_response(graph_doc_to_dict(spec.graph()))


def _handle_predicted(family: str, raw: str) -> Response:
    n = _parse_int(raw, "n")
    _check_param(n)
    if family == "path":
        return _json_response(graph_doc_to_dict(predicted_path_igraph(n)))
    if family == "cycle":
        return _json_response(graph_doc_to_dict(predicted_cycle_igraph(n)))
    return _error("Not found", 404)


def _handle_counts(family: str, raw: str) -> Response:
    n = _parse_int(raw, "n")
    _check_param(n)
    if family == "path":
        closed, gf, seed_fn = count_path_isets(n), path_gf_coefficient(*path_gf_parameters(n)), path
    elif family == "cycle":
        closed, gf, seed_fn = count_cycle_isets(n), gf_cycle_coefficient(*cycle_gf_parameters(n)), cycle
    else:
        return _error("Not found", 404)
    enumerated = len(enumerate_isets(seed_fn(n))) if n <= get_max_seed_order() else None
    resp = CountsResponse(family=family, n=n, closed_form=closed, generating_function=gf, enumerated=enumerated)
    return _json_response(resp.model_dump(mode="json"))


def _handle_build(body: Dict[str, Any]) -> Response:
    if "family" in body:
        spec = parse_family_spec(FamilyRequest.model_validate(body).family)
        _check_param(spec.param)
        seed = spec.graph()
    else:
        seed = parse_graph_payload(body)
    _check_seed(seed)
    return _json_response(igraph_to_json(build_igraph(seed)))


def _handle_hamilton(body: Dict[str, Any]) -> Response:
    req = HamiltonRequest.model_validate(body)
    spec = parse_family_spec(req.target)
    _check_param(spec.param)
    budget = _budget(req.budget)
    if spec.name == "cycle":
        _check_seed(cycle(spec.param))
        _, report = classify_cycle_igraph(spec.param, budget)
        payload = report.model_dump(mode="json")
        payload["predicted"] = predicted_cycle_hamiltonicity(spec.param)
        return _json_response(payload)
    graph = spec.graph()
    if spec.is_seed_family or req.igraph:
        _check_seed(graph)
        graph = build_igraph(graph).graph
    _check_order(graph)
    return _json_response(hamiltonian_cycle(graph, budget).model_dump(mode="json"))


@functions_framework.http
def igraph_api(request):
    """
    Cloud Function HTTP entry point for i-graph construction and analysis.

    Paths:
      - GET  /families/{name}/{param}
      - GET  /predicted/{path|cycle}/{n}
      - GET  /counts/{path|cycle}/{n}
      - POST /igraphs
      - POST /hamilton
    """
    try:
        if request.method == "OPTIONS":
            return _json_response({}, status=204)

        path_str = request.path or "/"
        parts = [p for p in path_str.split("/") if p]

        if not parts:
            return _json_response({"service": "igraph_api", "endpoints": ENDPOINTS})

        if parts[0] in ("families", "predicted", "counts"):
            if len(parts) != 3:
                return _error("Not found", 404)
            if request.method != "GET":
                return _error("Method not allowed", 405)
            if parts[0] == "families":
                return _handle_family(parts[1], parts[2])
            if parts[0] == "predicted":
                return _handle_predicted(parts[1], parts[2])
            return _handle_counts(parts[1], parts[2])

        if parts[0] in ("igraphs", "hamilton") and len(parts) == 1:
            if request.method != "POST":
                return _error("Method not allowed", 405)
            body, err = _parse_json(request)
            if err:
                return err
            if not isinstance(body, dict):
                return _error("JSON object body required", 400, {"code": "PARSE_ERROR"})
            if parts[0] == "igraphs":
                return _handle_build(body)
            return _handle_hamilton(body)

        return _error("Not found", 404)
    except ValidationError as e:
        return _error("Validation error", 400, {"details": e.errors(include_url=False)})
    except TooLargeError as e:
        return _json_response(e.to_payload(), status=413)
    except IGraphError as e:
        return _json_response(e.to_payload(), status=400)
    except Exception as e:
        logger.exception(f"igraph_api failed: {e}")
        return _error("Internal error", 500)
