"""
Text, JSON and YAML rendering of results.

Output is sorted canonically so the same model always gives the same bytes.
Variable indices are 1-based everywhere.
"""

from toric.markov import schemas
from toric.markov.monomials import render_binomial, render_monomial
from toric.markov.yaml import ModelYAML
import json


def matrix_text(model):
    "The matrix file format: 'd r' header then one line per row"
    lines = [f"{model.d} {model.r}"]
    lines.extend(" ".join(str(entry) for entry in row) for row in model.entries)
    return "\n".join(lines)

def binomial_data(binomial, with_degree=False):
    data = {'plus': list(binomial.plus), 'minus': list(binomial.minus)}
    if with_degree and binomial.degree is not None:
        data['degree'] = list(binomial.degree)
    return data

def degree_report_data(report):
    return {
        'degree': list(report.degree),
        'fiber_size': report.fiber_size,
        'components': report.component_count,
        'generators': report.generator_count,
        'minimal': report.minimal,
        'indispensable': report.indispensable,
        'quasi_indispensable': report.quasi_indispensable,
    }

def verdict_data(verdict):
    return {
        'verdict': verdict.verdict,
        'witness': list(verdict.witness) if verdict.witness is not None else None,
    }

def to_data(result):
    "Plain data for the JSON and YAML formats"
    if schemas.IModelMatrix.providedBy(result):
        return {'d': result.d, 'r': result.r, 'entries': [list(row) for row in result.entries]}
    if schemas.IFiber.providedBy(result):
        return {
            'degree': list(result.degree),
            'monomials': [list(u) for u in result.monomials],
        }
    if schemas.INablaComplex.providedBy(result):
        return {
            'degree': list(result.fiber.degree),
            'monomials': [list(u) for u in result.monomials],
            'edges': [[i + 1, j + 1] for i, j in result.edges()],
            'components': [[idx + 1 for idx in component] for component in result.components()],
        }
    if schemas.IDegreeReports.providedBy(result):
        return {'degrees': [degree_report_data(report) for report in result.reports]}
    if schemas.IGrobnerBasis.providedBy(result):
        return {
            'order': [list(row) for row in result.order.rows],
            'reduced': result.reduced,
            'binomials': [
                {'lead': list(element.lead), 'trail': list(element.trail)}
                for element in result.elements
            ],
        }
    if schemas.IMarkovBasis.providedBy(result):
        return {'binomials': [binomial_data(binomial, True) for binomial in result.binomials]}
    if schemas.ICertificate.providedBy(result):
        return {
            'applies': result.applies,
            'binomials': [binomial_data(binomial) for binomial in result.binomials],
        }
    if schemas.IBinomialSet.providedBy(result):
        return {'binomials': [binomial_data(binomial) for binomial in result.binomials]}
    if schemas.IMonomialSet.providedBy(result):
        return {'monomials': [list(u) for u in result.monomials]}
    if schemas.IVerdict.providedBy(result):
        return verdict_data(result)
    if schemas.IIndispensabilityReport.providedBy(result):
        data = to_data(result.degrees)
        data['markov'] = to_data(result.markov)['binomials']
        data['indispensable'] = to_data(result.indispensable)['binomials']
        data['monomials'] = to_data(result.monomials)['monomials']
        data.update(verdict_data(result.verdict))
        return data
    raise TypeError(f"Can not format {result!r}")

def to_text(result):
    if schemas.IModelMatrix.providedBy(result):
        return matrix_text(result)
    if schemas.IFiber.providedBy(result):
        return "\n".join(render_monomial(u) for u in result.monomials)
    if schemas.INablaComplex.providedBy(result):
        lines = [f"{idx + 1}: {render_monomial(u)}" for idx, u in enumerate(result.monomials)]
        lines.append("edges:")
        lines.extend(f"{i + 1} {j + 1}" for i, j in result.edges())
        lines.append("components:")
        lines.extend(
            " ".join(str(idx + 1) for idx in component) for component in result.components()
        )
        return "\n".join(lines)
    if schemas.IDegreeReports.providedBy(result):
        lines = []
        for report in result.reports:
            flags = [
                flag for flag in ('indispensable', 'quasi_indispensable')
                if getattr(report, flag)
            ]
            lines.append("{}  fiber {}  components {}  generators {}{}".format(
                " ".join(str(value) for value in report.degree),
                report.fiber_size,
                report.component_count,
                report.generator_count,
                "  " + " ".join(flags) if flags else "",
            ))
        return "\n".join(lines)
    if schemas.IGrobnerBasis.providedBy(result):
        return "\n".join(
            "{} - {}".format(render_monomial(element.lead), render_monomial(element.trail))
            for element in result.elements
        )
    if schemas.ICertificate.providedBy(result):
        lines = ["applies" if result.applies else "does not apply"]
        lines.extend(render_binomial(binomial) for binomial in result.binomials)
        return "\n".join(lines)
    if schemas.IMarkovBasis.providedBy(result) or schemas.IBinomialSet.providedBy(result):
        return "\n".join(render_binomial(binomial) for binomial in result.binomials)
    if schemas.IMonomialSet.providedBy(result):
        return "\n".join(render_monomial(u) for u in result.monomials)
    if schemas.IVerdict.providedBy(result):
        if result.witness is None:
            return result.verdict
        return "{} witness {}".format(result.verdict, " ".join(str(value) for value in result.witness))
    if schemas.IIndispensabilityReport.providedBy(result):
        sections = [
            ("minimal degrees", to_text(result.degrees)),
            ("markov basis", to_text(result.markov)),
            ("indispensable binomials", to_text(result.indispensable)),
            ("indispensable monomials", to_text(result.monomials)),
            ("verdict", to_text(result.verdict)),
        ]
        return "\n\n".join(f"# {title}\n{body}".rstrip() for title, body in sections)
    raise TypeError(f"Can not format {result!r}")

def emit(result, output_format='text'):
    "Render a result as a string ending in a newline (empty output stays empty)"
    if output_format == 'json':
        return json.dumps(to_data(result)) + "\n"
    if output_format == 'yaml':
        return ModelYAML().dump(to_data(result))
    text = to_text(result)
    if text == "":
        return ""
    return text + "\n"
