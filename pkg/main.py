import logging
import sys
from typing import List, Optional

from core.config import configure_logging, create_parser
from routes.commands import register_commands

logger = logging.getLogger("gelliptic")


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    register_commands(parser)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        configure_logging(args.log_level)
        return args.handler(args)
    except ValueError as e:
        # domain, divergence, quadrature and bracket failures all derive from ValueError
        print(f"gelliptic {args.command}: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.exception("internal error in %s", args.command)
        print(f"gelliptic {args.command}: internal error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
