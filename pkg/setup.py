import os
import re

from setuptools import setup

# Load the package's __init__.py to get version string
here = os.path.abspath(os.path.dirname(__file__))
init_py = os.path.join(here, 'mapoly', '__init__.py')
with open(init_py) as f:
    VERSION = re.search("__version__ = \'(.*?)\'", f.read()).group(1)

DESC = 'Exact classification of smooth reflexive polytopes carrying polynomial ' \
       'solutions of the toric Monge-Ampere equation, up to dimension 6.'

readme_rst = os.path.join(here, 'README.rst')
with open(readme_rst) as f:
    LONG_DESC = f.read()

DEPENDENCIES = [
        'numpy >= 1.17',
        'scipy >= 1.6',
        'pandas >= 0.22',
        'sympy >= 1.5',
        'python-flint >= 0.3',
]

TEST_DEPENDENCIES = [
        'pytest',
        'hypothesis',
]

setup(
    name='mapoly',
    version=VERSION,
    description=DESC,
    long_description=LONG_DESC,
    keywords=['Kaehler-Einstein', 'Monge-Ampere', 'toric', 'reflexive polytope', 'Delzant', 'exact arithmetic'],
    license='GPL',
    classifiers=[
        # Trove classifiers
        # Full list: https://pypi.python.org/pypi?%3Aaction=list_classifiers
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License (GPL)',
        'Operating System :: OS Independent',
        'Topic :: Software Development :: Libraries :: Python Modules',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],

    packages=['mapoly'],
    package_data={
        'mapoly': ['githash'],
    },
    include_package_data=True,
    entry_points={
        'console_scripts': [
            'mapoly = mapoly.cli:main'
        ]
    },

    python_requires='>=3.7',
    install_requires=DEPENDENCIES,
    extras_require={
        'test': TEST_DEPENDENCIES,
    },
)
