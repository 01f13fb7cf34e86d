"""Classification driver.

For a dimension ``n`` the candidates are the undecomposable catalog entries
of dimension ``n`` and all cartesian products of lower dimensional entries
with dimensions adding up to ``n``. Undecomposable entries go through the
full pipeline (geometric gates, edge relations, template, graded
obstruction, verification); a product is solved exactly when all of its
factors are, so its verdict is derived from the factors.
"""

import itertools
import json
import logging
import pathlib
import time
from collections import namedtuple

import pandas as pd

from .ansatz import kh_feasible, failed_relation, axis_lengths, h_max, build_template, simplex_solution, \
    product_solution
from .catalog import builtin_catalog, MIN_DIM, MAX_DIM
from .errors import InvariantViolation, UnsupportedDimension
from .formats import crumbs
from .monge_ampere import verify_solution, SYMBOLIC, SAMPLED
from .obstruction import obstruct, Solution, RelationObstruction, CoefficientObstruction, Inconclusive
from .polytope import is_reflexive, is_delzant, barycenter, decompose
from .preferences import Preferences

log = logging.getLogger(__name__)

#: One candidate of a report. ``factors`` lists catalog ids (a single one for
#: undecomposable candidates); ``derived_from`` names the factor whose verdict
#: was taken over, if any.
ReportEntry = namedtuple('ReportEntry', ['id', 'dim', 'factors', 'verdict', 'derived_from'])

JSON = 'json'
TEXT = 'text'


def _verify(witness, preferences):
    if witness.nvars <= preferences.symbolic_max_dim:
        return verify_solution(witness, SYMBOLIC)
    return verify_solution(witness, SAMPLED, preferences.trials, preferences.seed)


def check_gates(polytope):
    """ The geometric gates a candidate has to pass, as a dictionary of
    booleans plus the blocks of :func:`~mapoly.polytope.decompose`. """
    reflexive = is_reflexive(polytope)
    result = {
        'reflexive': reflexive,
        'delzant': is_delzant(polytope),
        'barycenter_zero': all(x == 0 for x in barycenter(polytope)),
        'blocks': [list(b) for b in decompose(polytope)] if reflexive else None,
    }
    result['undecomposable'] = result['blocks'] is not None and len(result['blocks']) == 1
    return result


def _decide_template(template, preferences, simplex):
    n = template.dim
    if simplex and n > preferences.symbolic_max_dim:
        # closed form candidate instead of running the engine in high degree
        candidate = simplex_solution(n)
        if template.admits(candidate):
            verification = _verify(candidate, preferences)
            if verification:
                return Solution(candidate, verification)
    max_degree = preferences.simplex_max_degree(n) if simplex else preferences.max_degree
    return obstruct(template, max_degree, preferences.symbolic_max_dim, preferences.trials, preferences.seed)


def decide(polytope, preferences=None, simplex=False, discrepancies=None, label=None):
    """ Verdict for a single reflexive polytope with ``(-1, ..., -1)`` as a
    vertex: relation gates first, then one template per admissible profile.

    A :class:`Solution` for any profile wins, then :class:`Inconclusive`,
    otherwise the obstruction of the first profile is returned.

    :param simplex: Whether the polytope is the reflexive simplex, which is
           examined up to a higher degree.
    :param discrepancies: List collecting profiles whose ``H`` is below
           ``h_max``.
    """
    preferences = preferences or Preferences()
    label = label or str(polytope)
    profiles = kh_feasible(polytope)
    if not profiles:
        return RelationObstruction(failed_relation(polytope), axis_lengths(polytope), h_max(polytope))
    bound = h_max(polytope)
    verdicts = []
    for profile in profiles:
        if profile.H != bound and discrepancies is not None:
            discrepancies.append('{}: profile with H {} below h_max'.format(label, profile.H))
        verdicts.append(_decide_template(build_template(polytope, profile), preferences, simplex))
    for kind in (Solution, Inconclusive):
        for v in verdicts:
            if isinstance(v, kind):
                return v
    return verdicts[0]


class _Classifier(object):
    """ Verdicts of catalog entries, computed once and shared by the
    products they appear in. """

    def __init__(self, preferences):
        self.preferences = preferences
        self.verdicts = {}
        self.timings = {}
        self.discrepancies = []

    def verdict(self, entry):
        if entry.id not in self.verdicts:
            start = time.perf_counter()
            self.verdicts[entry.id] = self._run(entry)
            self.timings[entry.id] = time.perf_counter() - start
            log.info('{}: {} in {:.2f}s'.format(entry.id, self.verdicts[entry.id].kind, self.timings[entry.id]))
        return self.verdicts[entry.id]

    def _run(self, entry):
        gates = check_gates(entry.polytope)
        if not (gates['reflexive'] and gates['delzant'] and gates['barycenter_zero'] and gates['undecomposable']):
            raise InvariantViolation('Catalog entry {} fails the geometric gates: {}'.format(entry.id, gates))
        for problem in entry.integrity():
            self.discrepancies.append('{}: {}'.format(entry.id, problem))
        return decide(entry.polytope, self.preferences, entry.is_simplex, self.discrepancies, entry.id)

    def product(self, factors):
        verdicts = [self.verdict(e) for e in factors]
        for e, v in zip(factors, verdicts):
            if not isinstance(v, Solution):
                return v, e.id
        witness = verdicts[0].witness
        for v in verdicts[1:]:
            witness = product_solution(witness, v.witness)
        verification = _verify(witness, self.preferences)
        if not verification:
            raise InvariantViolation('Product {} of solutions is not a solution'.format([e.id for e in factors]))
        return Solution(witness, verification), None


def _partitions(n, largest=None):
    """ Partitions of ``n`` as non increasing tuples. """
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def product_candidates(n):
    """ Lists of catalog entries (at least two) whose dimensions add up to
    ``n``, one list per multiset. """
    result = []
    for parts in _partitions(n):
        if len(parts) < 2:
            continue
        choices = []
        for dim, count in sorted(((d, parts.count(d)) for d in set(parts)), reverse=True):
            choices.append(list(itertools.combinations_with_replacement(builtin_catalog(dim), count)))
        for combination in itertools.product(*choices):
            result.append([e for group in combination for e in group])
    return result


class ClassificationReport(object):
    """ Verdicts for every candidate of one dimension.

    ``timings`` holds wall clock seconds per catalog entry; it's kept apart
    from the entries so that reports of identical runs are byte identical
    unless timings are requested.
    """

    def __init__(self, dim, entries, timings, discrepancies, preferences):
        self.dim = dim
        self.entries = entries
        self.timings = timings
        self.discrepancies = discrepancies
        self.preferences = preferences

    def __str__(self):
        return 'ClassificationReport(dim {}, {} candidates, {} solutions)'.format(
            self.dim, len(self.entries), len(self.solutions))

    @property
    def solutions(self):
        """ Witness polynomials of the candidates with a :class:`Solution`. """
        return [e.verdict.witness for e in self.entries if isinstance(e.verdict, Solution)]

    @property
    def solved(self):
        return [e.id for e in self.entries if isinstance(e.verdict, Solution)]

    @property
    def summary(self):
        counts = {}
        for e in self.entries:
            counts[e.verdict.kind] = counts.get(e.verdict.kind, 0) + 1
        return 'dim {}: {} candidates, {}'.format(
            self.dim, len(self.entries), ', '.join('{} {}'.format(v, k) for k, v in sorted(counts.items())))

    def to_json(self, include_timings=False):
        data = {
            'dim': self.dim,
            'entries': [{
                'id': e.id,
                'dim': e.dim,
                'factors': list(e.factors),
                'derived_from': e.derived_from,
                'verdict': e.verdict.to_json(),
            } for e in self.entries],
            'solutions': self.solved,
            'discrepancies': list(self.discrepancies),
            'summary': self.summary,
        }
        if include_timings:
            data['timings'] = {k: round(v, 3) for k, v in sorted(self.timings.items())}
        return data

    def dataframe(self):
        """ One row per candidate with a short description of its verdict. """
        rows = [(e.id, e.dim, e.verdict.kind, _detail(e)) for e in self.entries]
        return pd.DataFrame(rows, columns=['candidate', 'dim', 'verdict', 'detail'])

    def export_entries(self, file):
        """ Export one line per candidate into a CSV file.

        :param file: A path-like object.
        """
        file = pathlib.Path(file)
        log.info('Exporting {} to {}'.format(self, file))
        with file.open('w', encoding='utf-8') as f:
            # Write version and git hash as comment for tracking
            f.write(crumbs())
            self.dataframe().to_csv(f, header=True, index=False)
        return file


def _detail(entry):
    v = entry.verdict
    prefix = 'via {}: '.format(entry.derived_from) if entry.derived_from else ''
    if isinstance(v, Solution):
        text = 'verified {}'.format(v.verification.mode) if v.verification else 'solution'
    elif isinstance(v, RelationObstruction):
        text = '{} fails'.format(v.failed)
    elif isinstance(v, CoefficientObstruction):
        text = '{} at {} (degree {}): {}'.format(v.reason, v.monomial, v.degree, v.certificate.format(list(v.names)))
    else:
        text = '{} open equations at degree {}'.format(len(v.unresolved), v.degree_reached)
    return prefix + text


def classify(n, preferences=None):
    """ Classify all candidates of dimension ``n``.

    :param n: Dimension, 1 to 6.
    :param preferences: A :class:`~mapoly.preferences.Preferences`,
           defaults when omitted.
    :return: A :class:`ClassificationReport`.
    """
    if not MIN_DIM <= n <= MAX_DIM:
        raise UnsupportedDimension('Classification covers dimensions {} to {}, got {}'.format(MIN_DIM, MAX_DIM, n))
    preferences = preferences or Preferences()
    log.info('Classifying dimension {} with {}'.format(n, preferences))
    classifier = _Classifier(preferences)
    entries = []
    for e in builtin_catalog(n):
        entries.append(ReportEntry(e.id, n, (e.id,), classifier.verdict(e), None))
    for factors in product_candidates(n):
        verdict, derived_from = classifier.product(factors)
        entries.append(ReportEntry(' x '.join(e.id for e in factors), n, tuple(e.id for e in factors),
                                   verdict, derived_from))
    report = ClassificationReport(n, entries, classifier.timings, classifier.discrepancies, preferences)
    log.info(report.summary)
    return report


def emit_report(report, format=JSON, include_timings=False):
    """ Render a report as UTF-8 bytes, either JSON (sorted keys) or a text
    table. """
    if format == JSON:
        text = json.dumps(report.to_json(include_timings), sort_keys=True, indent=2) + '\n'
    elif format == TEXT:
        lines = [crumbs().rstrip('\n'), report.summary, '', report.dataframe().to_string(index=False)]
        if report.discrepancies:
            lines += ['', 'Discrepancies:'] + ['  ' + d for d in report.discrepancies]
        if include_timings:
            lines += ['', 'Timings:'] + ['  {}: {:.3f}s'.format(k, v) for k, v in sorted(report.timings.items())]
        text = '\n'.join(lines) + '\n'
    else:
        raise ValueError('Unknown report format {}'.format(format))
    return text.encode('utf-8')
