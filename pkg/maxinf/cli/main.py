import os
import sys

from django.core.management import ManagementUtility

from .utils import EXIT_USAGE


class InfluenceUtility(ManagementUtility):
    """`manage.py` dispatcher; an unknown subcommand is a usage error."""

    def fetch_command(self, subcommand):
        try:
            return super().fetch_command(subcommand)
        except SystemExit as error:
            raise SystemExit(EXIT_USAGE) from error


def main(argv=None):
    """Run one subcommand and return its exit code."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'maxinf.settings')
    try:
        InfluenceUtility(list(argv or sys.argv)).execute()
    except SystemExit as error:
        if error.code is None:
            return 0
        return error.code if isinstance(error.code, int) else EXIT_USAGE
    return 0
