# ruff: noqa: F401
#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Common objects shared by all simcolor modules."""

################
# GLOBAL IMPORTS
################

import errno
import hashlib
import os
import sys
from configparser import ConfigParser, NoOptionError, NoSectionError
from configparser import Error as ConfigParserError
from typing import Dict, List, Union

# Prefer faster libs for JSON (de)serialization
# Preference Order: orjson > json (builtin)
try:
    import orjson

    _JSON_BACKEND = 'orjson'
except ImportError:
    # Need to log info but importing logger will cause cyclic imports
    import json

    _JSON_BACKEND = 'json'

##############
# GLOBALS VARS
##############

# Membership of an edge is stored as a bitmask, one bit per member graph
MAX_MEMBERS = 64

# Exit codes shared by every command
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


###################
# GLOBALS FUNCTIONS
###################


def b(s, errors='replace'):
    if isinstance(s, bytes):
        return s
    return s.encode('utf-8', errors=errors)


def json_backend():
    """Return the name of the JSON library in use."""
    return _JSON_BACKEND


def json_dumps(data, sort_keys=False) -> bytes:
    """Return the object data in a compact JSON format.

    Both backends produce the same bytes for the same data: no whitespace,
    keys sorted when sort_keys is True.
    """
    if _JSON_BACKEND == 'orjson':
        option = orjson.OPT_SORT_KEYS if sort_keys else 0
        return orjson.dumps(data, option=option)
    return b(json.dumps(data, sort_keys=sort_keys, separators=(',', ':'), ensure_ascii=False))


def json_loads(data: Union[str, bytes, bytearray]) -> Union[Dict, List]:
    """Load a JSON buffer into memory as a Python object"""
    if _JSON_BACKEND == 'orjson':
        return orjson.loads(data)
    return json.loads(data)


def json_error_types():
    """Return the exception classes raised by json_loads on a malformed buffer."""
    if _JSON_BACKEND == 'orjson':
        return (orjson.JSONDecodeError, UnicodeDecodeError)
    return (json.JSONDecodeError, UnicodeDecodeError)


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def popcount(mask: int) -> int:
    """Number of bits set in mask (int.bit_count is 3.10+)."""
    return bin(mask).count('1')


def bits(mask: int) -> List[int]:
    """Return the sorted list of bit indexes set in mask."""
    ret = []
    i = 0
    while mask:
        if mask & 1:
            ret.append(i)
        mask >>= 1
        i += 1
    return ret


def safe_makedirs(path):
    """A safe function for creating a directory tree."""
    try:
        os.makedirs(path)
    except OSError as err:
        if err.errno == errno.EEXIST:
            if not os.path.isdir(path):
                raise
        else:
            raise


def read_bytes(path):
    """Read a whole file, '-' meaning standard input."""
    if path == '-':
        return sys.stdin.buffer.read()
    with open(path, 'rb') as f:
        return f.read()


def write_bytes(path, data: bytes):
    """Write data to path followed by a newline, None or '-' meaning standard output."""
    if path is None or path == '-':
        sys.stdout.buffer.write(data + b'\n')
        sys.stdout.flush()
        return
    with open(path, 'wb') as f:
        f.write(data + b'\n')
