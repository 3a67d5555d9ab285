from django.core.exceptions import ValidationError


def validate_positive(value):
    """Validator for sizes such as ell, k and r
    """
    if value < 1:
        raise ValidationError(
            '%(value)s must be a positive integer',
            params={'value': value},
        )


def validate_rectangular(rows):
    """Validator for matrix grids
    """
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise ValidationError(
            'rows have different lengths: %(widths)s',
            params={'widths': sorted(widths)},
        )


def validate_field_elements(values, order):
    """Every packed element must lie in [0, order)
    """
    bad = [value for value in values if value < 0 or value >= order]
    if bad:
        raise ValidationError(
            '%(value)s is not an element of a field of order %(order)s',
            params={'value': bad[0], 'order': order},
        )
