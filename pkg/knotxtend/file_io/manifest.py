# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Certificate manifests as pandas DataFrames.
# Author: knotxtend developers
#
# License: BSD 3 clause

import pandas as pd

from .json_io import dumps

COLUMNS = ['name', 'code', 'test', 'verdict', 'witnesses']


def certificate_manifest(names, codes, certificates):
    """One row per certificate, in the given order.

    Parameters
    ----------
    names : list of str
    codes : list of str
        Canonical codes of the certified diagrams.
    certificates : list of Certificate

    Returns
    ----------
    manifest : pandas.DataFrame
        Columns name, code, test, verdict and witnesses, the last as
        canonical JSON text.

    """
    if not len(names) == len(codes) == len(certificates):
        raise ValueError('Got %d names, %d codes and %d certificates.'
                         % (len(names), len(codes), len(certificates)))
    rows = [[n, c, cert.test, cert.verdict,
             dumps(cert.to_dict()['witnesses'])]
            for n, c, cert in zip(names, codes, certificates)]
    return pd.DataFrame(rows, columns=COLUMNS)


def write_manifest(manifest, path):
    manifest.to_csv(path, index=False)


def read_manifest(path):
    return pd.read_csv(path, dtype=str, keep_default_na=False)


def verdict_counts(manifest):
    """Number of certificates per verdict."""
    return manifest.groupby('verdict').size().to_dict()
