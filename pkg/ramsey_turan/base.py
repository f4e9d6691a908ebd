from fractions import Fraction


class RamseyTuranException(Exception):
    pass


def popcount(mask):
    return bin(mask).count('1')


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask):
    return list(iter_bits(mask))


def mask_of(indices):
    result = 0
    for i in indices:
        result |= 1 << i
    return result


def lowest_bit(mask):
    return (mask & -mask).bit_length() - 1


def format_fraction(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f'{value.numerator}/{value.denominator}'
    return value
