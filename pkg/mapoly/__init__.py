from os.path import dirname, abspath, join

import logging

__version__ = '0.3.0'


def githash():
    """
    Get the git hash of this release of *mapoly*.

    The Hash is a string. It can be ``None``, which means you're using a non
    official release of *mapoly*.
    """
    here = dirname(abspath(__file__))
    try:
        with open(join(here, 'githash'), encoding='utf-8') as f:
            hash_ = f.read().strip()
    except FileNotFoundError:
        return None
    if hash_ == '':
        return None
    return hash_


# Log version and its git hash when module is imported
log = logging.getLogger(__name__)
log.info('mapoly Version {}, Git Hash {}'.format(__version__, githash()))

from .polytope import Polytope, HalfspaceSystem
from .poly import Monomial, ParamPoly, PolyQ
from .ansatz import KHProfile, AnsatzTemplate
from .obstruction import Solution, RelationObstruction, CoefficientObstruction, Inconclusive
from .classify import classify, ClassificationReport
