"""Command-line front end.

One binary, subcommand style.  Inputs are JSON documents (factorization,
morphism, fan) or built-in preset names (``An:<n>:<a>``, ``pair:uv``,
fans ``P1 P2 P3 F1 dP6``).  ``--format machine`` wraps every report in a
versioned JSON envelope; errors go to stderr with exit code 1 (domain)
or 2 (usage).
"""

from __future__ import annotations

import sys
from fractions import Fraction

import click

from .poly import QQ, PolyError, field_from_spec
from . import mf as mfmod
from . import hom as hommod
from . import files
from . import corpus
from . import mirror as mirrormod
from . import oracle
from .groebner import INFINITE

SCHEMA_VERSION = files.SCHEMA_VERSION


class _Settings:
    def __init__(self):
        self.format = "human"
        self.field = None


pass_settings = click.make_pass_decorator(_Settings, ensure=True)


def _field_of(settings):
    return settings.field or QQ


def _fail(message: str):
    click.echo("error: %s" % message, err=True)
    sys.exit(1)


def _load_factorization(ref: str, settings):
    try:
        return corpus.lookup(ref, _field_of(settings))
    except KeyError:
        pass
    loaded = files.load(ref, settings.field)
    if not isinstance(loaded, mfmod.MatrixFactorization):
        raise files.SchemaError("%s does not hold a factorization" % ref)
    return loaded


def _load_morphism(ref: str, settings):
    loaded = files.load(ref, settings.field)
    if not isinstance(loaded, mfmod.MFMorphism):
        raise files.SchemaError("%s does not hold a morphism" % ref)
    return loaded


def _load_fan(path_or_preset, preset):
    if (path_or_preset is None) == (preset is None):
        raise click.UsageError("give exactly one fan: a file argument or --preset")
    if preset is not None:
        try:
            return mirrormod.preset(preset)
        except KeyError as exc:
            raise files.SchemaError(str(exc.args[0])) from None
    loaded = files.load(path_or_preset)
    if not isinstance(loaded, mirrormod.ToricSpec):
        raise files.SchemaError("%s does not hold a fan" % path_or_preset)
    return loaded


def _dim_value(d):
    return "INFINITE" if d is INFINITE else d


def _emit_report(settings, verb, payload, human_lines):
    if settings.format == "machine":
        doc = {"schema_version": SCHEMA_VERSION, "verb": verb, "status": "ok"}
        doc.update(payload)
        click.echo(files.dumps(doc), nl=False)
    else:
        for line in human_lines:
            click.echo(line)


def _emit_object(settings, verb, obj, out, source_ref=None, target_ref=None):
    doc = files.object_to_document(obj, source_ref, target_ref)
    if out is not None:
        files.save(out, doc)
        _emit_report(settings, verb, {"written": out}, ["wrote %s" % out])
        return
    if settings.format == "machine":
        envelope = {"schema_version": SCHEMA_VERSION, "verb": verb,
                    "status": "ok", "result": doc}
        click.echo(files.dumps(envelope), nl=False)
    else:
        click.echo(files.dumps(doc), nl=False)


def _parse_params(pairs):
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise click.UsageError("--param expects name=value, got %r" % pair)
        name, _, raw = pair.partition("=")
        try:
            params[name.strip()] = Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            raise click.UsageError("--param %s: %r is not a rational" % (name, raw))
    return params


def _run(fn):
    try:
        fn()
    except (PolyError, ValueError) as exc:
        _fail(str(exc))


@click.group()
@click.option("--format", "fmt", type=click.Choice(["human", "machine"]),
              default="human", show_default=True, help="report style")
@click.option("--field", "field_spec", default=None, metavar="Q|Fp:<p>",
              help="override the coefficient field of file inputs")
@pass_settings
def main(settings, fmt, field_spec):
    """Exact computations with matrix factorizations and mirror superpotentials."""
    settings.format = fmt
    if field_spec is not None:
        try:
            settings.field = field_from_spec(field_spec)
        except (PolyError, ValueError) as exc:
            raise click.UsageError(str(exc))


@main.command()
@click.argument("factorization")
@pass_settings
def validate(settings, factorization):
    """Check the defining identities of a factorization."""
    def go():
        obj = _load_factorization(factorization, settings)
        report = mfmod.validate(obj)
        payload = {
            "valid": report.ok,
            "rank": obj.rank,
            "field": repr(obj.ring.field),
            "vars": list(obj.ring.variables),
            "W": str(obj.w),
            "lambda": obj.ring.field.format(obj.lam),
        }
        _emit_report(settings, "validate", payload, [
            "valid:  yes",
            "rank:   %d" % obj.rank,
            "W:      %s" % obj.w,
            "lambda: %s" % obj.ring.field.format(obj.lam),
            "field:  %s" % repr(obj.ring.field),
        ])
    _run(go)


@main.command()
@click.argument("factorization")
@click.option("--twice", is_flag=True, help="apply the shift twice")
@click.option("-o", "--output", default=None, type=click.Path(), help="write result here")
@pass_settings
def shift(settings, factorization, twice, output):
    """Shift a factorization (E -> E[1], or E[2] with --twice)."""
    def go():
        obj = _load_factorization(factorization, settings)
        shifted = mfmod.shift(obj)
        if twice:
            shifted = mfmod.shift(shifted)
        _emit_object(settings, "shift", shifted, output)
    _run(go)


@main.command(name="sum")
@click.argument("left")
@click.argument("right")
@click.option("-o", "--output", default=None, type=click.Path())
@pass_settings
def sum_cmd(settings, left, right, output):
    """Direct sum of two factorizations with the same context."""
    def go():
        a = _load_factorization(left, settings)
        b = _load_factorization(right, settings)
        _emit_object(settings, "sum", mfmod.direct_sum(a, b), output)
    _run(go)


@main.command()
@click.argument("morphism")
@click.option("-o", "--output", default=None, type=click.Path())
@pass_settings
def cone(settings, morphism, output):
    """Mapping cone of a closed morphism."""
    def go():
        p = _load_morphism(morphism, settings)
        _emit_object(settings, "cone", mfmod.cone(p), output)
    _run(go)


@main.command()
@click.argument("left")
@click.argument("right")
@click.option("-o", "--output", default=None, type=click.Path())
@pass_settings
def tensor(settings, left, right, output):
    """Tensor product over disjoint variable sets; potentials add."""
    def go():
        a = _load_factorization(left, settings)
        b = _load_factorization(right, settings)
        _emit_object(settings, "tensor", mfmod.tensor(a, b), output)
    _run(go)


@main.command()
@click.argument("factorization")
@click.option("--vars", "varnames", default="u,v", show_default=True,
              metavar="U,V", help="names of the two fresh variables")
@click.option("-o", "--output", default=None, type=click.Path())
@pass_settings
def knorrer(settings, factorization, varnames, output):
    """Stabilize: tensor with (u, v) over W + uv."""
    def go():
        names = tuple(s.strip() for s in varnames.split(","))
        if len(names) != 2 or not all(names):
            raise click.UsageError("--vars expects two comma-separated names")
        obj = _load_factorization(factorization, settings)
        _emit_object(settings, "knorrer", mfmod.knorrer(obj, names), output)
    _run(go)


@main.command()
@click.argument("factorization")
@click.option("--upto", default=10, show_default=True,
              help="largest degree of the Hilbert slice table")
@pass_settings
def cok(settings, factorization, upto):
    """Present coker(e1) over the singular fiber and measure it."""
    def go():
        obj = _load_factorization(factorization, settings)
        pres = mfmod.cokernel_presentation(obj, hilbert_upto=upto)
        payload = {
            "fiber_relation": str(pres.fiber_relation),
            "dimension": _dim_value(pres.dimension),
            "hilbert": list(pres.hilbert),
            "presentation": [[str(pres.presentation.get(i, j))
                              for j in range(pres.presentation.cols)]
                             for i in range(pres.presentation.rows)],
        }
        lines = [
            "fiber relation: %s" % pres.fiber_relation,
            "dimension:      %s" % _dim_value(pres.dimension),
            "hilbert:        %s" % " ".join(str(h) for h in pres.hilbert),
        ]
        _emit_report(settings, "cok", payload, lines)
    _run(go)


@main.command()
@click.argument("source")
@click.argument("target")
@click.option("--oracle", "use_oracle", is_flag=True,
              help="cross-check with the degree-truncation solver")
@pass_settings
def hom(settings, source, target, use_oracle):
    """Dimensions of the even/odd morphism spaces up to homotopy."""
    def go():
        e = _load_factorization(source, settings)
        f = _load_factorization(target, settings)
        report = hommod.hom_dims(e, f)
        payload = {"h0": _dim_value(report.h0), "h1": _dim_value(report.h1)}
        lines = ["h0: %s" % _dim_value(report.h0), "h1: %s" % _dim_value(report.h1)]
        if use_oracle:
            if report.h0 is INFINITE or report.h1 is INFINITE:
                payload["oracle"] = "skipped (infinite dimensions)"
                lines.append("oracle: skipped (infinite dimensions)")
            else:
                checked = oracle.hom_dims_truncated(e, f)
                if checked != (report.h0, report.h1):
                    _fail("oracle mismatch: module path (%s, %s) vs truncation (%s, %s)"
                          % (report.h0, report.h1, checked[0], checked[1]))
                payload["oracle"] = "agrees"
                lines.append("oracle: agrees")
        _emit_report(settings, "hom", payload, lines)
    _run(go)


@main.command()
@click.argument("morphism")
@pass_settings
def nullhomotopic(settings, morphism):
    """Decide null-homotopy; print a witness (s0, s1) when one exists."""
    def go():
        p = _load_morphism(morphism, settings)
        flag, witness = hommod.is_null_homotopic(p)
        payload = {"null_homotopic": flag}
        lines = ["null-homotopic: %s" % ("yes" if flag else "no")]
        if witness is not None:
            payload["s0"] = [[str(witness.s0.get(i, j)) for j in range(witness.s0.cols)]
                             for i in range(witness.s0.rows)]
            payload["s1"] = [[str(witness.s1.get(i, j)) for j in range(witness.s1.cols)]
                             for i in range(witness.s1.rows)]
            lines.append("s0: %s" % payload["s0"])
            lines.append("s1: %s" % payload["s1"])
        _emit_report(settings, "nullhomotopic", payload, lines)
    _run(go)


@main.command()
@click.argument("morphism")
@pass_settings
def equiv(settings, morphism):
    """Decide whether a closed morphism is a homotopy equivalence."""
    def go():
        p = _load_morphism(morphism, settings)
        flag = hommod.is_homotopy_equivalence(p)
        _emit_report(settings, "equiv", {"homotopy_equivalence": flag},
                     ["homotopy equivalence: %s" % ("yes" if flag else "no")])
    _run(go)


@main.command()
@click.argument("inputs", nargs=-1, required=True)
@click.option("-o", "--output", default=None, type=click.Path())
@pass_settings
def totalize(settings, inputs, output):
    """Fold a chain of closed morphisms (or one object) into one factorization."""
    def go():
        if len(inputs) == 1:
            try:
                single = _load_factorization(inputs[0], settings)
            except (files.SchemaError, PolyError):
                single = None
            if single is not None:
                cx = mfmod.PairComplex([single], [])
                _emit_object(settings, "totalize", mfmod.totalize(cx), output)
                return
        maps = [_load_morphism(ref, settings) for ref in inputs]
        objects = [maps[0].source] + [p.target for p in maps]
        cx = mfmod.PairComplex(objects, maps)
        _emit_object(settings, "totalize", mfmod.totalize(cx), output)
    _run(go)


def _fan_options(fn):
    fn = click.argument("fan", required=False)(fn)
    fn = click.option("--preset", default=None,
                      help="built-in fan: %s" % " ".join(sorted(mirrormod.PRESETS)))(fn)
    return fn


@main.command(name="mirror-build")
@_fan_options
@click.option("-o", "--output", default=None, type=click.Path())
@pass_settings
def mirror_build(settings, fan, preset, output):
    """Laurent superpotential with one term per ray."""
    def go():
        spec = _load_fan(fan, preset)
        built = mirrormod.build_superpotential(spec)
        payload = {
            "W": str(built.w),
            "variables": list(built.y_names),
            "parameters": list(built.param_names),
            "terms": [str(t) for t in built.ray_terms],
        }
        lines = [
            "W:          %s" % built.w,
            "variables:  %s" % " ".join(built.y_names),
            "parameters: %s" % (" ".join(built.param_names) or "(none)"),
        ]
        if output is not None:
            files.save(output, files.toric_to_doc(spec))
            payload["written"] = output
            lines.append("wrote %s" % output)
        _emit_report(settings, "mirror-build", payload, lines)
    _run(go)


@main.command(name="mirror-count")
@_fan_options
@click.option("--param", "params", multiple=True, metavar="NAME=VALUE",
              help="positive rational value for a Kaehler parameter")
@pass_settings
def mirror_count(settings, fan, preset, params):
    """Number of torus critical points, counted with multiplicity."""
    def go():
        spec = _load_fan(fan, preset)
        built = mirrormod.build_superpotential(spec)
        count = mirrormod.critical_count(built, _parse_params(params))
        _emit_report(settings, "mirror-count", {"count": count},
                     ["critical points: %d" % count])
    _run(go)


@main.command(name="mirror-values")
@_fan_options
@click.option("--param", "params", multiple=True, metavar="NAME=VALUE")
@pass_settings
def mirror_values(settings, fan, preset, params):
    """Monic univariate polynomial vanishing on the critical values."""
    def go():
        spec = _load_fan(fan, preset)
        built = mirrormod.build_superpotential(spec)
        report = mirrormod.critical_values(built, _parse_params(params))
        payload = {
            "count": report.count,
            "value_polynomial": str(report.value_polynomial),
            "distinct_values": report.distinct_values,
        }
        _emit_report(settings, "mirror-values", payload, [
            "critical points:  %d" % report.count,
            "value polynomial: %s" % report.value_polynomial,
            "distinct values:  %s" % ("yes" if report.distinct_values else "no"),
        ])
    _run(go)


@main.command(name="mirror-fiber")
@_fan_options
@click.option("--param", "params", multiple=True, metavar="NAME=VALUE")
@click.option("--at", "at_value", default="0", show_default=True,
              metavar="RATIONAL", help="regular value whose fiber is counted")
@pass_settings
def mirror_fiber(settings, fan, preset, params, at_value):
    """Number of distinct torus points in the fiber over a regular value."""
    def go():
        spec = _load_fan(fan, preset)
        built = mirrormod.build_superpotential(spec)
        try:
            value = Fraction(at_value)
        except (ValueError, ZeroDivisionError):
            raise click.UsageError("--at expects a rational, got %r" % at_value)
        n = mirrormod.fiber_cardinality(built, _parse_params(params), value)
        _emit_report(settings, "mirror-fiber", {"cardinality": n},
                     ["fiber cardinality: %d" % n])
    _run(go)


if __name__ == "__main__":
    main()
