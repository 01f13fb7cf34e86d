import configparser
import logging
import pathlib

log = logging.getLogger(__name__)

PREFS_MAX_DEGREE = 'obstruct/max_degree'
PREFS_MAX_DEGREE_DEFAULT = 4

PREFS_TRIALS = 'verify/trials'
PREFS_TRIALS_DEFAULT = 20
PREFS_SEED = 'verify/seed'
PREFS_SEED_DEFAULT = 1
PREFS_SYMBOLIC_MAX_DIM = 'verify/symbolic_max_dim'
PREFS_SYMBOLIC_MAX_DIM_DEFAULT = 3

PREFS_SIMPLEX_DEGREE_FACTOR = 'classify/simplex_max_degree_factor'
PREFS_SIMPLEX_DEGREE_FACTOR_DEFAULT = 2

PREFS_BOX = 'enumerate/box'
PREFS_BOX_DEFAULT = 4

_KEYS = [
    ('max_degree', PREFS_MAX_DEGREE, PREFS_MAX_DEGREE_DEFAULT, 2),
    ('trials', PREFS_TRIALS, PREFS_TRIALS_DEFAULT, 1),
    ('seed', PREFS_SEED, PREFS_SEED_DEFAULT, 0),
    ('symbolic_max_dim', PREFS_SYMBOLIC_MAX_DIM, PREFS_SYMBOLIC_MAX_DIM_DEFAULT, 0),
    ('simplex_max_degree_factor', PREFS_SIMPLEX_DEGREE_FACTOR, PREFS_SIMPLEX_DEGREE_FACTOR_DEFAULT, 1),
    ('box', PREFS_BOX, PREFS_BOX_DEFAULT, 1),
]


class Preferences:
    """ Tunables of the classification, stored in an ini file.

    Keys are written ``section/option``; a file looks like::

        [obstruct]
        max_degree = 5

        [verify]
        trials = 40
    """

    def __init__(self):
        self.max_degree = PREFS_MAX_DEGREE_DEFAULT
        self.trials = PREFS_TRIALS_DEFAULT
        self.seed = PREFS_SEED_DEFAULT
        self.symbolic_max_dim = PREFS_SYMBOLIC_MAX_DIM_DEFAULT
        self.simplex_max_degree_factor = PREFS_SIMPLEX_DEGREE_FACTOR_DEFAULT
        self.box = PREFS_BOX_DEFAULT

    def __str__(self):
        return 'Preferences({})'.format(', '.join('{}={}'.format(a, getattr(self, a)) for a, _, _, _ in _KEYS))

    def simplex_max_degree(self, n):
        """ Degree up to which a simplex template is examined. """
        return self.simplex_max_degree_factor * n + 2

    @staticmethod
    def load(path=None):
        """ Read preferences from an ini file. Missing options keep their
        defaults; invalid values are logged and ignored.

        :param path: A path-like object or ``None`` for the defaults.
        """
        instance = Preferences()
        if path is None:
            return instance
        path = pathlib.Path(path)
        log.info('Loading preferences from {}'.format(path))
        ini = configparser.ConfigParser()
        if not ini.read(str(path), encoding='utf-8'):
            raise ValueError('Can not read preferences file {}'.format(path))
        for attribute, key, default, minimum in _KEYS:
            section, option = key.split('/')
            if not ini.has_option(section, option):
                continue
            try:
                value = ini.getint(section, option)
            except ValueError:
                log.warning('Value of {} in {} is not an integer, using {}'.format(key, path, default))
                continue
            if value < minimum:
                log.warning('Value {} of {} is below {}, using {}'.format(value, key, minimum, default))
                continue
            setattr(instance, attribute, value)
        return instance

    def save(self, path):
        path = pathlib.Path(path)
        log.info('Saving preferences to {}'.format(path))
        ini = configparser.ConfigParser()
        for attribute, key, _, _ in _KEYS:
            section, option = key.split('/')
            if not ini.has_section(section):
                ini.add_section(section)
            ini.set(section, option, str(getattr(self, attribute)))
        with path.open('w', encoding='utf-8') as f:
            ini.write(f)
        return path
