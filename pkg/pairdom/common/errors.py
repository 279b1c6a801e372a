# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Error types shared by all pairdom modules. Each carries the process exit code
    the command line front end reports for it.
"""


class PairdomError(Exception):
    """ Base class for all expected pairdom failures """
    exit_code = 1


class PairdomInputError(PairdomError, ValueError):
    """ Malformed input files, invalid arguments or generator specifications """
    exit_code = 2


class InstanceError(PairdomError, ValueError):
    """ A well-formed instance outside the class a solver or construction accepts """
    exit_code = 3


class CapacityError(PairdomError):
    """ An exhaustive computation would exceed its configured budget """
    exit_code = 4


class VerificationError(PairdomError):
    """ A solution failed independent verification """
    exit_code = 5
