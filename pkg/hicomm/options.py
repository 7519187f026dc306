'''Global options for hicomm.

Caps and default bounds live in the module level ``OPTIONS`` dict. Change
them with :class:`set_options`, either globally or as a context manager::

    with hicomm.set_options(cube_cap=10**5):
        ...

or load a YAML file with :func:`load_options`.
'''

import logging
import yaml

log = logging.getLogger(__name__)


OPTIONS = {
    'congruence_cap': 8,
    'matrix_cap': 2**20,
    'cube_cap': 10**6,
    'tuple_cap': 10**8,
    'element_cap': 10**6,
    'workers': 1,
    'chunk': 2**16,
    'i_max': 2,
    'j_max': 2,
    'depth': 2,
    'g_samples': 1,
    'seed': 0,
}

def _positive_int(value):
    return isinstance(value, int) and not isinstance(value, bool) and value > 0

def _natural(value):
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0

_VALIDATORS = {
    'congruence_cap': _positive_int,
    'matrix_cap': _positive_int,
    'cube_cap': _positive_int,
    'tuple_cap': _positive_int,
    'element_cap': _positive_int,
    'workers': _positive_int,
    'chunk': _positive_int,
    'i_max': _natural,
    'j_max': _natural,
    'depth': _natural,
    'g_samples': _natural,
    'seed': _natural,
}


def validate_options(values):
    '''Check a mapping of option names to values, returning it as a dict.'''
    values = dict(values)
    for k, v in values.items():
        if k not in OPTIONS:
            raise ValueError('%r is not a valid option. Valid options are: %s'
                             % (k, ', '.join(sorted(OPTIONS))))
        if not _VALIDATORS[k](v):
            raise ValueError('option %r got an invalid value %r' % (k, v))
    return values


class set_options(object):
    """Set options for hicomm in a controlled context.

    Currently supported options:

    - ``congruence_cap``: largest carrier whose congruences are enumerated.
    - ``matrix_cap``: bound on ``N**(2**n)`` for full matrix generation.
    - ``cube_cap``: bound on stored cubes in bounded generation.
    - ``tuple_cap``: bound on operation applications per generation.
    - ``element_cap``: bound on elements tracked by a partial congruence.
    - ``workers``: threads used for block evaluation.
    - ``chunk``: argument tuples evaluated per block.
    - ``i_max``, ``j_max``, ``depth``, ``g_samples``: default verification bounds.
    - ``seed``: seed recorded for the random corpus.
    """

    def __init__(self, **kwargs):
        values = validate_options(kwargs)
        self.old = {k: OPTIONS[k] for k in values}
        OPTIONS.update(values)
        log.debug('options set: %s', values)

    def __enter__(self):
        return

    def __exit__(self, type, value, traceback):
        OPTIONS.update(self.old)


def load_options(path):
    '''Read options from a YAML mapping and validate them.'''
    with open(path, 'r') as f:
        values = yaml.safe_load(f)
    if values is None:
        return {}
    if not isinstance(values, dict):
        raise ValueError('config file %s must contain a mapping' % path)
    return validate_options(values)


def get_option(name, value=None):
    '''Return value if given, otherwise the current global option.'''
    return OPTIONS[name] if value is None else value
