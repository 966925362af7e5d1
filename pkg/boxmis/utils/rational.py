# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import math
from fractions import Fraction

import six

from boxmis.utils.errors import BoxmisError


def to_rational(value):
    """ 数値をFractionに変換する

    Decimal strings are parsed exactly ("2.651" is 2651/1000), as are "num/den"
    strings. Floats go through their shortest repr so that 0.1 means 1/10.

    Args:
        value (int, str, float, Fraction): 変換する値

    Returns:
        Fraction: 正確な有理数
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise BoxmisError("Illegal rational: %r" % value)
    if isinstance(value, six.integer_types):
        return Fraction(value)
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            raise BoxmisError("Illegal rational: %r" % value)
        return Fraction(repr(value))
    if isinstance(value, six.string_types):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise BoxmisError("Illegal rational: %s" % value)
    try:
        return Fraction(value)
    except (TypeError, ValueError):
        raise BoxmisError("Illegal rational: %r" % (value,))


def format_rational(value):
    """ Fractionを文字列にする

    Integers print bare, terminating decimals print as decimals and everything
    else prints as "num/den". parse(format(x)) == x for every rational.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return "%d" % value.numerator
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return "%d/%d" % (value.numerator, value.denominator)
    digits = max(twos, fives)
    scaled = abs(value) * 10 ** digits
    text = "%d" % scaled.numerator
    text = text.rjust(digits + 1, "0")
    sign = "-" if value < 0 else ""
    return "%s%s.%s" % (sign, text[:-digits], text[-digits:])


def ceil_root(value, k):
    """ c**k >= value を満たす最小の整数 c (value >= 1) """
    value = Fraction(value)
    c = max(1, int(math.floor(float(value) ** (1.0 / k))))
    while c > 1 and (c - 1) ** k >= value:
        c -= 1
    while c ** k < value:
        c += 1
    return c


def ceil_log2(value):
    """ 2**t >= value を満たす最小の整数 t (value >= 1) """
    value = Fraction(value)
    t = 0
    while 2 ** t < value:
        t += 1
    return t
