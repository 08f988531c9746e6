# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# A function for searching knot code files in local directories.
# Author: knotxtend developers
#
# License: BSD 3 clause

import os

CODE_EXTENSIONS = ('.dt', '.gauss', '.json')


def find_code_files(path, substring='', recursive=False,
                    extensions=CODE_EXTENSIONS, ignore_invisible=True,
                    ignore_substring=None):
    """Find knot code files in a directory.

    Parameters
    ----------
    path : `str`
        Path where to look.
    substring : `str` (default: '')
        Substring that all files have to contain to be considered.
    recursive : `bool` (default: False)
        If true, searches subdirectories recursively.
    extensions : `tuple` (default: ('.dt', '.gauss', '.json'))
        Only returns files with one of these extensions.
    ignore_invisible : `bool` (default: True)
        If `True`, ignores invisible files
        (i.e., files starting with a period).
    ignore_substring : `str` (default: None)
        Ignores files that contain the specified substring.

    Returns
    ----------
    results : `list`
        Sorted list of the matched files.

    """
    def check_file(f, path):
        if ignore_invisible and f.startswith('.'):
            return False
        if ignore_substring and ignore_substring in f:
            return False
        if substring not in f:
            return False
        compl_path = os.path.join(path, f)
        if os.path.isfile(compl_path):
            return compl_path
        return False

    results = []

    if recursive:
        for par, nxt, fnames in os.walk(path):
            for f in fnames:
                fn = check_file(f, par)
                if fn:
                    results.append(fn)

    else:
        for f in os.listdir(path):
            fn = check_file(f, path)
            if fn:
                results.append(fn)

    if extensions:
        results = [r for r in results
                   if os.path.splitext(r)[-1] in extensions]

    return sorted(results)


def code_kind(path):
    """'dt', 'gauss' or 'json' from the file extension."""
    ext = os.path.splitext(path)[-1]
    if ext not in CODE_EXTENSIONS:
        raise ValueError('Unknown code file extension %r. Expected one of %s'
                         % (ext, ', '.join(CODE_EXTENSIONS)))
    return ext[1:]
