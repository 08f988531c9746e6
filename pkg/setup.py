# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from os.path import realpath, dirname, join
from setuptools import setup, find_packages
import knotxtend

VERSION = knotxtend.__version__
PROJECT_ROOT = dirname(realpath(__file__))

REQUIREMENTS_FILE = join(PROJECT_ROOT, 'requirements.txt')

with open(REQUIREMENTS_FILE) as f:
    install_reqs = f.read().splitlines()

install_reqs.append('setuptools')


setup(name='knotxtend',
      version=VERSION,
      description='Knot Diagram Calculus Extensions',
      author='knotxtend developers',
      packages=find_packages(exclude=['examples', 'examples.*']),
      package_data={'': ['LICENSE-BSD3.txt',
                         'README.md',
                         'requirements.txt'],
                    'knotxtend.data': ['data/knots.csv']
                    },
      include_package_data=True,
      install_requires=install_reqs,
      extras_require={'testing': ['pytest', 'hypothesis'],
                      'docs': ['mkdocs']},
      entry_points={'console_scripts': ['knotxtend=knotxtend.cli:main']},
      license='BSD 3-Clause',
      platforms='any',
      classifiers=[
             'License :: OSI Approved :: BSD License',
             'Development Status :: 3 - Alpha',
             'Operating System :: POSIX',
             'Operating System :: Unix',
             'Operating System :: MacOS',
             'Programming Language :: Python :: 3.8',
             'Topic :: Scientific/Engineering',
             'Topic :: Scientific/Engineering :: Mathematics',
      ],
      long_description="""

Exact knot diagram calculus: invariants, Seifert graph indices,
diagram moves, twist equivalence series and certificates for
conjectures on Alexander polynomials of alternating knots.

""")
