"""FastAPI service exposing every computation as a JSON endpoint.

Precondition violations surface as 400 responses whose detail names the
violated rule; range responses carry a `discrepancies` list that clients use
to distinguish "computed fine, published value disagrees" from success.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import catalog as catalog_mod
from .. import charges as charges_mod
from .. import inequalities as ineq_mod
from .. import sequiv as sequiv_mod
from .. import slopes as slopes_mod
from .. import walls as walls_mod
from ..chern import euler_pairing_surface, twist
from ..lattice import CanonicalData, ChernVector, ContractionKind, make_model
from ..rationals import InputError, parse_rational
from . import schemas as sc

app = FastAPI(
    title="perstab",
    description="Exact stability and wall-crossing data for extremal contractions",
    version="0.1.0",
)


def _model(params: sc.ModelParams):
    kind = ContractionKind.parse(params.kind)
    canonical = None
    if params.ky_dot_omega is not None or params.chi_o is not None:
        if params.ky_dot_omega is None or params.chi_o is None:
            raise InputError("canonical data needs both ky_dot_omega and chi_o")
        canonical = CanonicalData(
            parse_rational(params.ky_dot_omega, "ky_dot_omega"),
            parse_rational(params.chi_o, "chi_o"),
        )
    return make_model(
        kind,
        params.w,
        ti_d_cube=params.ti_d_cube,
        ti_fw_dsq=params.ti_fw_dsq,
        ti_fwsq_d=params.ti_fwsq_d,
        canonical=canonical,
    )


def _class(model, payload: sc.ClassPayload) -> ChernVector:
    return ChernVector.from_json(model.kind, payload.as_dict())


def _guard(fn):
    try:
        return fn()
    except InputError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/model", response_model=sc.ModelResponse, response_model_exclude_none=True)
def model_endpoint(req: sc.ModelRequest):
    return _guard(lambda: _model(req).to_json())


@app.post("/catalog", response_model=sc.CatalogResponse, response_model_exclude_none=True)
def catalog_endpoint(req: sc.CatalogRequest):
    def run():
        model = _model(req)
        return {
            "kind": model.kind.value,
            "simples": [s.to_json() for s in catalog_mod.simples(model)],
        }

    return _guard(run)


@app.post("/brange", response_model=sc.BRangeResponse, response_model_exclude_none=True)
def brange_endpoint(req: sc.BRangeRequest):
    return _guard(lambda: catalog_mod.solve_b_range(_model(req)).to_json())


@app.post("/twist", response_model=sc.TwistResponse, response_model_exclude_none=True)
def twist_endpoint(req: sc.ClassRequest):
    def run():
        model = _model(req)
        return {"twisted": twist(model, _class(model, req.cls), req.b).to_json()}

    return _guard(run)


@app.post("/charge", response_model=sc.ChargeResponse, response_model_exclude_none=True)
def charge_endpoint(req: sc.ClassRequest):
    def run():
        model = _model(req)
        return charges_mod.charge(model, _class(model, req.cls), req.b).to_json()

    return _guard(run)


@app.post("/slope", response_model=sc.SlopeResponse, response_model_exclude_none=True)
def slope_endpoint(req: sc.ClassRequest):
    def run():
        model = _model(req)
        v = _class(model, req.cls)
        out = {"mu": slopes_mod.mu(model, v).to_json()}
        if model.kind.is_threefold:
            out["nu"] = slopes_mod.nu(model, req.b, v).to_json()
            out["trichotomy"] = slopes_mod.trichotomy(model, req.b, v).value
        return out

    return _guard(run)


@app.post("/bg", response_model=sc.BGSuiteResponse, response_model_exclude_none=True)
def bg_endpoint(req: sc.BGRequest):
    def run():
        model = _model(req)
        v = _class(model, req.cls)
        out = {"discriminant": ineq_mod.bg_discriminant(model, v).to_json()}
        if model.kind.is_surface:
            out["weak"] = ineq_mod.bg_weak_surface(model, v).to_json()
            if req.c_omega is not None:
                out["strong"] = ineq_mod.bg_strong_margin(
                    model, v, req.c_omega, req.threshold
                ).to_json()
        elif v.ch0 > 0:
            out["threefold"] = ineq_mod.bg_threefold_margin(model, req.b, v).to_json()
        return out

    return _guard(run)


@app.post("/norm", response_model=sc.NormResponse, response_model_exclude_none=True)
def norm_endpoint(req: sc.ClassRequest):
    def run():
        model = _model(req)
        v = _class(model, req.cls)
        z = charges_mod.z_surface(model, v)
        out = {
            "norm": str(ineq_mod.support_norm(model, v)),
            "charge": z.to_json(),
        }
        if not z.is_zero():
            out["ratio_sq"] = str(ineq_mod.support_ratio_sq(model, v))
        return out

    return _guard(run)


@app.post("/chi", response_model=sc.ChiResponse, response_model_exclude_none=True)
def chi_endpoint(req: sc.PairRequest):
    def run():
        model = _model(req)
        value = euler_pairing_surface(model, _class(model, req.cls), _class(model, req.cls2))
        return {"chi": str(value)}

    return _guard(run)


@app.post("/sequiv", response_model=sc.SequivResponse, response_model_exclude_none=True)
def sequiv_endpoint(req: sc.SequivRequest):
    def run():
        model = _model(req)
        result = sequiv_mod.decompose(
            model, _class(model, req.cls), req.b, bound_multiplier=req.bound_multiplier
        )
        return result.to_json()

    return _guard(run)


@app.post("/wall", response_model=sc.WallResponse, response_model_exclude_none=True)
def wall_endpoint(req: sc.WallRequest):
    def run():
        model = _model(req)
        out: dict = {}
        if req.object is not None:
            if req.t is None:
                raise InputError("wall: a verdict for an object needs t")
            obj = walls_mod.moduli_objects(model)[req.object]
            out["object"] = req.object
            out["verdict"] = walls_mod.stability_verdict(model, obj, req.t).value
            return out
        if req.cls is None or req.cls2 is None:
            raise InputError("wall: provide either an object name or two classes")
        va = _class(model, req.cls)
        vb = _class(model, req.cls2)
        out["wall"] = walls_mod.solve_wall_param(model, va, vb).to_json()
        if req.t is not None:
            out["order"] = walls_mod.phase_order_family(model, va, vb, req.t).value
            ra, ia = walls_mod.family_charge(model, va, req.t)
            rb, ib = walls_mod.family_charge(model, vb, req.t)
            out["charges"] = {
                "class": {"re": ra.to_json(), "im": ia.to_json()},
                "class2": {"re": rb.to_json(), "im": ib.to_json()},
            }
        return out

    return _guard(run)
