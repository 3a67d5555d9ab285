"""
Text and JSON report emission

JSON documents come from the app serializers, so they carry the schema
version and serialize matrices exactly as the input files do.
"""
import json


def dump(payload):
    return json.dumps(payload, indent=2, default=str)


def emit_report(stdout, lines, payload=None, as_json=False):
    if as_json:
        stdout.write(dump(payload))
        return
    for line in lines:
        stdout.write(line)


def write_document(path, payload):
    with open(path, 'w') as handle:
        handle.write(dump(payload))
        handle.write('\n')


def format_vector(vector):
    return '(' + ', '.join(str(int(v)) for v in vector) + ')'


def format_basis(basis):
    rows = [format_vector(row) for row in basis]
    if len(rows) == 1:
        return 'span' + rows[0]
    return 'span{' + ', '.join(rows) + '}'


def format_family(family):
    verdict = 'independent' if family.rank == family.size else 'dependent'
    return f'{family.size} matrices, rank {family.rank}, {verdict}'


def format_violations(violations):
    return [f'  {v.kind} {list(v.indices)}: {v.message}' for v in violations]
