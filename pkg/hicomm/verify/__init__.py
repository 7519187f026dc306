from ._bounds import Bounds, VerdictLog, summary_frame
from ._lemmas import check_injectivity_lemma, check_successors, check_generators
from ._witness import nonsolvability_witness
from ._supernil import supernilpotence_scan
from ._pointed import pointed_asymmetry

# this makes the imported functions appear in sphinx docs
__all__ = ['Bounds', 'VerdictLog', 'summary_frame', 'check_injectivity_lemma',
           'check_successors', 'check_generators', 'nonsolvability_witness',
           'supernilpotence_scan', 'pointed_asymmetry', 'run_check', 'CHECKS']


CHECKS = ('injectivity', 'successors', 'generators', 'witness', 'supernilpotence', 'pointed')


def run_check(name, n, bounds=None):
    """Run one bounded verification on the n-ary ladder algebra.

    Args:
        name (str): One of 'injectivity', 'successors', 'generators',
            'witness', 'supernilpotence' or 'pointed'. The pointed check
            ignores n.
        n (int): Arity of the ladder algebra, at least 2.
        bounds (Bounds): Sample and depth bounds; defaults come from the
            global options.

    Returns:
        VerdictLog: The outcome, with counterexamples if any were found.
    """
    bounds = bounds or Bounds()
    if name == 'pointed':
        return pointed_asymmetry(bounds)
    if n < 2:
        raise ValueError('ladder algebras need n >= 2, got %d' % n)
    if name == 'injectivity':
        return check_injectivity_lemma(n, bounds)
    elif name == 'successors':
        return check_successors(n, bounds)
    elif name == 'generators':
        return check_generators(n, bounds)
    elif name == 'witness':
        return nonsolvability_witness(n, bounds)
    elif name == 'supernilpotence':
        return supernilpotence_scan(n, bounds)
    else:
        raise ValueError("check should be one of %s, got %r" % (', '.join(CHECKS), name))
