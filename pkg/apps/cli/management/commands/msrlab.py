import argparse

from django.core.management.base import BaseCommand, CommandError

from apps.cli.dispatch import cli_dispatch


class Command(BaseCommand):
    help = (
        'MSR array-code experiments: verify-mds, verify-repair, repair, search-scheme, '
        'search-maxk, reduce-theta, certify, bounds'
    )

    def add_arguments(self, parser):
        parser.add_argument('argv', nargs=argparse.REMAINDER, help='subcommand and its arguments')

    def handle(self, *args, **options):
        status = cli_dispatch(options['argv'], stdout=self.stdout, stderr=self.stderr)
        if status:
            raise CommandError(f'msrlab exited with status {status}', returncode=status)
