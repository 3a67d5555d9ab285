from django.conf import settings

from .exceptions import LimitExceeded


def limit(name):
    """Read a size cap such as `MSRLAB_SUBSPACE_LIMIT` from settings
    """
    return getattr(settings, f'MSRLAB_{name.upper()}_LIMIT')


def ensure_within(count, name, error_class=LimitExceeded, what='items'):
    cap = limit(name)
    if count > cap:
        raise error_class(
            f'{count} {what} exceed the limit of {cap}',
            payload={'count': count, 'limit': cap},
        )
    return count


def parse_index_list(value):
    """'1,3,4' -> [1, 3, 4]
    """
    value = (value or '').strip()
    if not value:
        return []
    return [int(item) for item in value.split(',') if item.strip()]


def parse_pairs(value):
    """'1:2,3:4' -> [(1, 2), (3, 4)]
    """
    ret = []
    for item in (value or '').split(','):
        item = item.strip()
        if not item:
            continue
        left, right = item.split(':')
        ret.append((int(left), int(right)))
    return ret


def parse_partition(value):
    """'1,2;3,4' -> [[1, 2], [3, 4]]
    """
    return [parse_index_list(block) for block in (value or '').split(';') if block.strip()]
