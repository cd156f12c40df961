"""The permfix module is callable."""

import signal
import sys
import warnings

from . import DEBUG, sigint_handler


def main() -> None:
    """Implement permfix entry point.

    Exit status is 0 on success, 1 when an identity, fixture or benchmark
    check fails and 2 on usage errors.
    """
    if not DEBUG:
        signal.signal(signal.SIGINT, sigint_handler)
        warnings.simplefilter("ignore")
    from . import args, error

    warnings.simplefilter("default", error.PermfixWarning)

    try:
        args.parse_args()()
    except error.PermfixError as err:
        if DEBUG:
            raise
        errtype = type(err).__name__
        if isinstance(err, error.UsageError):
            print(
                "usage: permfix [-h] "
                "{verify,table,bench,permutations,identities,version,config}",
                f"{errtype}: {err}",
                sep="\n",
                file=sys.stderr,
            )
            sys.exit(2)
        print(
            "Oops! permfix encountered the following problem while "
            "processing your request.",
            "",
            f"{errtype}: {err}",
            sep="\n",
            file=sys.stderr,
        )
        sys.exit(1)


if __name__ == "__main__":
    main()
