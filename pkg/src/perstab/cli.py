"""Command-line front end: a thin client over the JSON service.

Every subcommand builds the same request payload a remote caller would send
and dispatches it to the FastAPI app, in-process by default or over HTTP
when --url is given.  Output is deterministic (sorted keys, canonical "p/q"
rationals) in json, csv, or table form.

Exit codes: 0 success, 1 input error, 2 computation succeeded but a
published-value discrepancy was flagged.
"""

from __future__ import annotations

import argparse
import asyncio
import csv
import io
import json
import sys

import httpx

SUBCOMMANDS = (
    "model",
    "catalog",
    "brange",
    "twist",
    "charge",
    "slope",
    "bg",
    "norm",
    "chi",
    "sequiv",
    "wall",
)


def _dispatch_local(path: str, payload: dict) -> httpx.Response:
    from .service.app import app

    async def run():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://perstab") as client:
            return await client.post(path, json=payload)

    return asyncio.run(run())


def _dispatch_remote(url: str, path: str, payload: dict) -> httpx.Response:
    with httpx.Client(base_url=url) as client:
        return client.post(path, json=payload)


def call_service(path: str, payload: dict, url: str | None = None) -> httpx.Response:
    if url:
        return _dispatch_remote(url, path, payload)
    return _dispatch_local(path, payload)


def _add_common(p: argparse.ArgumentParser, *, needs_class: bool = False):
    p.add_argument("--kind", required=True,
                   choices=["surface", "TI", "TII", "TIII", "TIV", "TV"])
    p.add_argument("--w", default="1", help="omega^2 (surface) or omega^3 (3-fold), as p/q")
    p.add_argument("--b", default="0", help="divisor-twist parameter, as p/q")
    p.add_argument("--ti-d-cube", default="0", help="type I only: D^3")
    p.add_argument("--ti-fw-dsq", default="0", help="type I only: fw . D^2")
    p.add_argument("--ti-fwsq-d", default="0", help="type I only: fw^2 . D")
    p.add_argument("--ky-dot-omega", default=None, help="surface Euler form: K_Y . omega")
    p.add_argument("--chi-o", default=None, help="surface Euler form: chi(O_X)")
    if needs_class:
        p.add_argument("--class", dest="cls", required=True,
                       help='Chern vector as JSON, e.g. {"ch0":"0","ch1":{"C":"1"},"ch2":"1/2"}')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perstab",
        description="Exact stability and wall-crossing data for extremal contractions",
    )
    parser.add_argument("--url", default=None,
                        help="base URL of a running service; defaults to in-process dispatch")
    parser.add_argument("--format", choices=["json", "csv", "table"], default="json")
    # the same two flags are accepted after the subcommand; SUPPRESS keeps a
    # trailing occurrence from clobbering a leading one with its default
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--url", default=argparse.SUPPRESS)
    output.add_argument("--format", choices=["json", "csv", "table"],
                        default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sub(name: str, help_text: str, needs_class: bool = False):
        p = sub.add_parser(name, help=help_text, parents=[output])
        _add_common(p, needs_class=needs_class)
        return p

    add_sub("model", "print the intersection model")
    add_sub("catalog", "simple-object class catalog")
    add_sub("brange", "admissible twist range (exit 2 on discrepancy)")
    add_sub("twist", "e^{-bD}-twisted class", needs_class=True)
    add_sub("charge", "central charge of a class", needs_class=True)
    add_sub("slope", "slope, tilt slope and trichotomy", needs_class=True)
    bg = add_sub("bg", "discriminant-inequality margins", needs_class=True)
    bg.add_argument("--c-omega", default=None, help="constant for the strengthened margin")
    bg.add_argument("--threshold", default="0", choices=["0", "-1"],
                    help="threshold for the strengthened margin")
    add_sub("norm", "support norm and squared ratio (surface)", needs_class=True)
    chi = add_sub("chi", "surface Euler pairing of two classes", needs_class=True)
    chi.add_argument("--class2", dest="cls2", required=True, help="second class as JSON")
    seq = add_sub("sequiv", "decompose a class into simple classes", needs_class=True)
    seq.add_argument("--bound-multiplier", type=int, default=1)
    wall = add_sub("wall", "wall location / phase order / verdicts")
    wall.add_argument("--class", dest="cls", default=None, help="first class as JSON")
    wall.add_argument("--class2", dest="cls2", default=None, help="second class as JSON")
    wall.add_argument("--object", dest="obj", default=None,
                      choices=["O_x_on_C", "Lf_O_0", "OC_plus_OCm1"])
    wall.add_argument("--t", default=None, help="family parameter, as p/q")

    serve = sub.add_parser("serve", help="run the HTTP service", parents=[output])
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _parse_class(raw: str, what: str) -> dict:
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SystemExit(f"error: {what} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise SystemExit(f"error: {what} must be a JSON object")
    return data


def _payload(args: argparse.Namespace) -> dict:
    payload = {
        "kind": args.kind,
        "w": args.w,
        "ti_d_cube": getattr(args, "ti_d_cube", "0"),
        "ti_fw_dsq": getattr(args, "ti_fw_dsq", "0"),
        "ti_fwsq_d": getattr(args, "ti_fwsq_d", "0"),
    }
    if getattr(args, "ky_dot_omega", None) is not None:
        payload["ky_dot_omega"] = args.ky_dot_omega
    if getattr(args, "chi_o", None) is not None:
        payload["chi_o"] = args.chi_o
    if getattr(args, "b", None) is not None:
        payload["b"] = args.b
    if getattr(args, "cls", None) is not None:
        payload["class"] = _parse_class(args.cls, "--class")
    if getattr(args, "cls2", None) is not None:
        payload["class2"] = _parse_class(args.cls2, "--class2")
    if getattr(args, "obj", None) is not None:
        payload["object"] = args.obj
    if getattr(args, "t", None) is not None:
        payload["t"] = args.t
    if getattr(args, "c_omega", None) is not None:
        payload["c_omega"] = args.c_omega
    if getattr(args, "threshold", None) is not None:
        payload["threshold"] = args.threshold
    if getattr(args, "bound_multiplier", None) is not None:
        payload["bound_multiplier"] = args.bound_multiplier
    return payload


def _flatten(prefix: str, value, rows: list[tuple[str, str]]):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], rows)
    elif isinstance(value, list):
        for i, item in enumerate(value):
            _flatten(f"{prefix}[{i}]", item, rows)
    elif value is not None:
        rows.append((prefix, str(value)))


def render(data: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True)
    rows: list[tuple[str, str]] = []
    _flatten("", data, rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["key", "value"])
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse signals usage errors with 2; that code is reserved for
        # published-value discrepancies, so remap (--help keeps its 0)
        raise SystemExit(1 if exc.code == 2 else exc.code)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    try:
        response = call_service(f"/{args.command}", _payload(args), args.url)
    except httpx.HTTPError as exc:
        print(f"error: service unreachable: {exc}", file=sys.stderr)
        return 1

    if response.status_code == 400:
        print(f"error: {response.json().get('detail', 'bad request')}", file=sys.stderr)
        return 1
    if response.status_code == 422:
        print(f"error: malformed request: {response.text}", file=sys.stderr)
        return 1
    if response.status_code != 200:
        print(f"error: service returned {response.status_code}: {response.text}",
              file=sys.stderr)
        return 1

    data = response.json()
    print(render(data, args.format))
    if data.get("discrepancies"):
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
