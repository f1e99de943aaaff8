"""Define helpers commonly used throughout semiact.

SPDX-License-Identifier: BSD-3-Clause
"""

from fractions import Fraction
from typing import List, Optional, Sequence

import colorama
from semiact.action.exceptions import DocumentException


def encode_rational(value: Fraction) -> List[int]:
    """Encode an exact rational as a [numerator, denominator] pair."""
    value = Fraction(value)
    return [value.numerator, value.denominator]


def decode_rational(pair: Sequence[int]) -> Fraction:
    """Decode a [numerator, denominator] pair into an exact rational."""
    if len(pair) != 2 or pair[1] == 0:
        raise DocumentException(f"Invalid rational {list(pair)}, expected [num, den]")

    return Fraction(int(pair[0]), int(pair[1]))


def encode_optional(value: Optional[Fraction]) -> Optional[List[int]]:
    """Encode a rational which may be absent."""
    if value is None:
        return None

    return encode_rational(value)


def printi(string, indent: int = 4, prefix: str = None):
    """Super janky wrapper to print something indented."""
    for line in string.splitlines():
        if prefix:
            print(f"{prefix}", end="")

        print(f"{' ' * indent}" + line)


def banner(version: str) -> str:
    """Returns a semiact console banner."""
    banner = colorama.Fore.BLUE
    banner += rf"""
                     _            __
   ________  ____ ___  (_)___ _____/ /_
  / ___/ _ \/ __ `__ \/ / __ `/ ___/ __/
 (__  )  __/ / / / / / / /_/ / /__/ /_
/____/\___/_/ /_/ /_/_/\__,_/\___/\__/

       semiact version {version}
    """
    return banner
