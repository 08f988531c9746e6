# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Running a named certification test over many diagrams.
# Author: knotxtend developers
#
# License: BSD 3 clause

from joblib import Parallel, delayed

from .._base import Certificate, INAPPLICABLE
from ..invariants import alexander, signature
from ..utils.errors import (NotGenerating, PrerequisiteFails,
                            MissingUnitPolynomial)
from .coefficients import (logconcavity_test, trapezoidal_test,
                           os_inequalities, binomial_ratio_check)
from .hoste import positive_zero_test, rouche_test, hoste_numeric_check
from .logconcave import series_logconcavity_certify
from .sharpness import mwf_sharpness_test


def _hoste(d):
    return hoste_numeric_check(alexander(d))


def _logconcavity(d):
    return logconcavity_test(alexander(d))


def _trapezoidal(d):
    return trapezoidal_test(alexander(d), signature(d))


def _os(d):
    return os_inequalities(alexander(d), signature(d))


def _binomial(d):
    return binomial_ratio_check(alexander(d), signature(d))


TESTS = {'mwf-sharpness': mwf_sharpness_test,
         'positive-zero': positive_zero_test,
         'rouche': rouche_test,
         'hoste': _hoste,
         'logconcavity': _logconcavity,
         'trapezoidal': _trapezoidal,
         'os': _os,
         'binomial-ratio': _binomial,
         'series-logconcavity': series_logconcavity_certify}

_NOT_APPLICABLE = (NotGenerating, PrerequisiteFails, MissingUnitPolynomial)


def run_test(test, diagram):
    """Certificate of `test` on one diagram.

    Diagrams outside the scope of the test (not generating, failed
    prerequisites, no unit polynomial) give INAPPLICABLE certificates.
    """
    try:
        return TESTS[test](diagram)
    except _NOT_APPLICABLE as e:
        return Certificate(test.replace('-', '_'), INAPPLICABLE,
                           {'error': type(e).__name__}, [str(e)])


def certify(diagrams, test, n_jobs=1, pre_dispatch='2*n_jobs', verbose=0):
    """Run a named test over a sequence of diagrams.

    Parameters
    ----------
    diagrams : sequence of Diagram
    test : str
        One of the keys of `TESTS`.
    n_jobs : int (default: 1)
        The number of CPUs to use for certifying diagrams in parallel.
        -1 means 'all CPUs'.
    pre_dispatch : int, or string (default: '2*n_jobs')
        Controls the number of jobs that get dispatched
        during parallel execution if `n_jobs > 1` or `n_jobs=-1`.
        Reducing this number can be useful to avoid an explosion of
        memory consumption when more jobs get dispatched than CPUs can
        process.
    verbose : int (default: 0)
        Verbosity of the joblib progress messages.

    Returns
    ----------
    certificates : list of Certificate
        In the order of `diagrams`.

    """
    if test not in TESTS:
        raise ValueError('Unknown test %r. Choose one of %s'
                         % (test, ', '.join(sorted(TESTS))))
    diagrams = list(diagrams)
    if n_jobs == 1 or len(diagrams) < 2:
        return [run_test(test, d) for d in diagrams]
    parallel = Parallel(n_jobs=n_jobs, verbose=verbose,
                        pre_dispatch=pre_dispatch)
    return parallel(delayed(run_test)(test, d) for d in diagrams)
