# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Locating files shipped inside the package """

import os


def get_full_path(current_file: str, *args: str) -> str:
    """ Finds the absolute path of a file relative to the directory of another.

        Arguments:
            current_file: the file to start from, usually __file__ of the caller
            args: path components to append

        Returns:
            the absolute path
    """
    base = os.path.dirname(os.path.abspath(current_file))
    return os.path.join(base, *args)
