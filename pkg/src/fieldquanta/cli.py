"""Command-line client for the classification service.

The CLI is a thin HTTP client: it marshals arguments into a request, sends it
to a fieldquanta service, and renders the response. By default the service
runs in-process (no server needed); --server points it at a remote instance.

Exit codes: 0 success, 1 internal error, 2 input validation, 3 cross-module
classification inconsistency (a bug trap that should never fire).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import httpx

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3


class _InProcessClient:
    """Sync facade driving the ASGI app through httpx, one event loop per call."""

    def __init__(self, app):
        self._app = app

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False

    def _request(self, method: str, url: str, **kw) -> httpx.Response:
        import asyncio

        async def go():
            transport = httpx.ASGITransport(app=self._app, raise_app_exceptions=False)
            async with httpx.AsyncClient(transport=transport,
                                         base_url="http://fieldquanta.local") as client:
                return await client.request(method, url, **kw)

        return asyncio.run(go())

    def get(self, url: str, **kw) -> httpx.Response:
        return self._request("GET", url, **kw)

    def post(self, url: str, **kw) -> httpx.Response:
        return self._request("POST", url, **kw)


def make_client(server: str | None):
    if server:
        return httpx.Client(base_url=server, timeout=120.0)
    # default: drive the ASGI app in-process, no running server required
    from .service import app
    return _InProcessClient(app)


def _default_seed() -> int:
    try:
        return int(os.environ.get("FIELDQUANTA_SEED", "0"))
    except ValueError:
        return 0


def _write_output(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error_exit(resp: httpx.Response) -> int:
    try:
        payload = resp.json()
    except ValueError:
        payload = {"error": "InternalError", "detail": resp.text.strip()}
    if not isinstance(payload, dict):
        payload = {"error": "InternalError", "detail": str(payload)}
    kind = payload.get("error", "InternalError")
    detail = payload.get("detail", payload.get("message", ""))
    sys.stderr.write(f"error ({kind}): {detail}\n")
    for violation in payload.get("violations", []):
        sys.stderr.write(f"  - {violation}\n")
    if resp.status_code in (400, 404, 422):
        return EXIT_INVALID
    if kind in ("ValidationError", "ParseError", "UnknownName", "InvalidInput"):
        return EXIT_INVALID
    if kind == "InconsistencyError":
        return EXIT_INCONSISTENT
    return EXIT_INTERNAL


def _parse_modes(text: str):
    try:
        sites_str, length_str = text.split(",", 1)
        return {"sites": int(sites_str), "length": float(length_str)}
    except ValueError:
        raise SystemExit(f"--modes expects SITES,LENGTH (got {text!r})")


def cmd_classify(args) -> int:
    request: dict = {"seed": args.seed}
    if args.builtin:
        request["builtin"] = args.builtin
    else:
        try:
            with open(args.spec) as fh:
                request["spec"] = json.load(fh)
        except FileNotFoundError:
            sys.stderr.write(f"error: no such file {args.spec!r}\n")
            return EXIT_INVALID
        except json.JSONDecodeError as err:
            sys.stderr.write(f"error (ParseError): invalid JSON: {err}\n")
            return EXIT_INVALID
    if args.modes:
        request["modes"] = _parse_modes(args.modes)
    with make_client(args.server) as client:
        resp = client.post("/classify", json=request)
    if resp.status_code != 200:
        return _error_exit(resp)
    report = resp.json()
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        from .render import render_text
        text = render_text(report)
    _write_output(text, args.out)
    return EXIT_OK


def cmd_demo(args) -> int:
    with make_client(args.server) as client:
        resp = client.get(f"/demo/{args.name}")
    if resp.status_code != 200:
        return _error_exit(resp)
    sys.stdout.write(resp.json()["text"])
    return EXIT_OK


def cmd_validate(args) -> int:
    try:
        with open(args.spec) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        sys.stderr.write(f"error: no such file {args.spec!r}\n")
        return EXIT_INVALID
    except json.JSONDecodeError as err:
        sys.stderr.write(f"error (ParseError): invalid JSON: {err}\n")
        return EXIT_INVALID
    with make_client(args.server) as client:
        resp = client.post("/validate", json={"spec": doc})
    if resp.status_code != 200:
        return _error_exit(resp)
    body = resp.json()
    if body["valid"]:
        sys.stdout.write(f"{args.spec}: valid\n")
        return EXIT_OK
    sys.stderr.write(f"{args.spec}: invalid\n")
    for violation in body["errors"]:
        sys.stderr.write(f"  - {violation}\n")
    return EXIT_INVALID


def cmd_modes(args) -> int:
    request = {"builtin": args.builtin, "sites": args.sites,
               "length": args.length, "seed": args.seed}
    if args.field:
        request["field_name"] = args.field
    with make_client(args.server) as client:
        resp = client.post("/modes/csv", json=request)
    if resp.status_code != 200:
        return _error_exit(resp)
    _write_output(resp.text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fieldquanta",
        description="Classify particle content of linear field theories.")
    parser.add_argument("--server", default=None,
                        help="URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="run the classification pipeline")
    source = p_classify.add_mutually_exclusive_group(required=True)
    source.add_argument("--builtin", help="builtin theory name")
    source.add_argument("--spec", help="path to a spec JSON file")
    p_classify.add_argument("--format", choices=("text", "json"), default="text")
    p_classify.add_argument("--seed", type=int, default=_default_seed())
    p_classify.add_argument("--modes", default=None, metavar="SITES,LENGTH",
                            help="enable the lattice cross-check, e.g. 64,6.2832")
    p_classify.add_argument("--out", default=None, help="write the report to a file")
    p_classify.set_defaults(func=cmd_classify)

    p_demo = sub.add_parser("demo", help="print a worked walkthrough")
    p_demo.add_argument("name")
    p_demo.set_defaults(func=cmd_demo)

    p_validate = sub.add_parser("validate", help="validate a spec file")
    p_validate.add_argument("--spec", required=True)
    p_validate.set_defaults(func=cmd_validate)

    p_modes = sub.add_parser("modes", help="export seeded sample mode data as CSV")
    p_modes.add_argument("--builtin", required=True)
    p_modes.add_argument("--field", default=None)
    p_modes.add_argument("--sites", type=int, default=64)
    p_modes.add_argument("--length", type=float, default=6.283185307179586)
    p_modes.add_argument("--seed", type=int, default=_default_seed())
    p_modes.add_argument("--out", default=None)
    p_modes.set_defaults(func=cmd_modes)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except httpx.HTTPError as err:
        sys.stderr.write(f"error: transport failure: {err}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
