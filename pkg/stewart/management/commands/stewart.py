from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from django.utils import timezone

from stewart.exceptions import PreconditionError, StateCapExceeded, StewartError, UnresolvedHole


class PropertyViolated(CommandError):
    """
    Exception class indicating that a checked statement or an asserted query result is false.
    """
    def __init__(self, *args, **kwargs):
        kwargs.setdefault('returncode', 1)
        super().__init__(*args, **kwargs)


class ResourceCapExceeded(CommandError):
    """
    Exception class indicating that a construction exceeded the configured state cap.
    """
    def __init__(self, *args, **kwargs):
        kwargs.setdefault('returncode', 2)
        super().__init__(*args, **kwargs)


class UsageError(CommandError):
    """
    Exception class indicating a malformed invocation, query or script.
    """
    def __init__(self, *args, **kwargs):
        kwargs.setdefault('returncode', 3)
        super().__init__(*args, **kwargs)


class Command(BaseCommand):
    help = "Commands for Stewart words and their automata."

    def add_arguments(self, parser):
        parser.add_argument(
            'subcommand',
            help="./manage.py stewart [generate|eval|check|export|help]",
        )
        parser.add_argument(
            'args',
            nargs='*',
            help="Arguments of the sub-command.",
        )
        parser.add_argument(
            '--len',
            type=int,
            dest='length',
            default=None,
            help="Length of the generated prefix, or the exhaustive length bound of a check.",
        )
        parser.add_argument(
            '--seed',
            type=int,
            default=None,
            help="Seed of the sampled sweeps of a check.",
        )
        parser.add_argument(
            '--state-cap',
            type=int,
            dest='state_cap',
            default=None,
            help="Maximum number of live states of any construction.",
        )
        parser.add_argument(
            '--format',
            dest='output_format',
            default=None,
            help="Report format 'text' or 'json'; export format 'walnut' or 'dot'.",
        )
        parser.add_argument(
            '--fill',
            choices=['0', '1'],
            default=None,
            help="Symbol filling an unresolved hole of a generated word.",
        )
        parser.add_argument(
            '--strict',
            action='store_true',
            default=False,
            help="Reject undefined predicates even if they have an alias.",
        )
        parser.add_argument(
            '--script',
            default=None,
            help="Name of a shipped script, or path of a script file, to evaluate.",
        )
        parser.add_argument(
            '--expect',
            choices=['true', 'false'],
            default=None,
            help="Use in combination with 'eval' to assert the result of every closed formula.",
        )
        parser.add_argument(
            '--save',
            action='store_true',
            default=False,
            help="Use in combination with 'eval' to store all defined predicates in the library.",
        )
        parser.add_argument(
            '--output',
            default=None,
            help="Write to this file instead of the standard output.",
        )
        parser.add_argument(
            '--timestamp',
            action='store_true',
            default=False,
            help="Start reports with a timestamp header.",
        )

    def handle(self, *args, subcommand, **options):
        self.options = options
        if subcommand == 'help':
            self.stdout.write("""
Usage:

./manage.py stewart generate PATTERNS [--len N] [--fill 0|1]
    Print T(t) for a finite pattern sequence such as 'afe', or a prefix of the Stewart word
    of an ultimately periodic sequence such as '(ad)' or 'af(c)'.

./manage.py stewart eval [FORMULA | --script NAME_OR_FILE] [--expect true|false] [--save]
    Evaluate a closed formula, or run a script of eval/def/reg statements.

./manage.py stewart check [ID ...|all] [--len N] [--seed S]
    Run theorem checks by brute force. Without --len, longer sequences are sampled.

./manage.py stewart export NAME [--format walnut|dot] [--script NAME_OR_FILE]
    Write the word automaton TP, a predicate or a stored automaton.

Exit status: 0 success, 1 property violated, 2 state cap exceeded, 3 usage error.
""")
            return
        handlers = {
            'generate': self.generate,
            'eval': self.evaluate,
            'check': self.check,
            'export': self.export,
        }
        if subcommand not in handlers:
            msg = "Unknown sub-command '{}' for stewart. Use one of: generate eval check export help"
            raise UsageError(msg.format(subcommand))
        try:
            output = handlers[subcommand](*args)
        except StateCapExceeded as exc:
            raise ResourceCapExceeded(str(exc))
        except (StewartError, OSError) as exc:
            raise UsageError(str(exc))
        self.write(output)

    def write(self, output):
        if self.options['timestamp']:
            output = "# {}\n{}".format(timezone.now().isoformat(), output)
        if self.options['output']:
            Path(self.options['output']).write_text(output if output.endswith('\n') else output + '\n')
        else:
            self.stdout.write(output)

    def render(self, data):
        from stewart.rest import JSONRenderer

        return JSONRenderer().render(data, renderer_context={'indent': 2}).decode()

    def session(self):
        from stewart.prover.session import Session

        return Session.preloaded(state_cap=self.options['state_cap'], strict=self.options['strict'] or None)

    def script_text(self):
        from stewart.prover.script import shipped_script

        script = self.options['script']
        path = Path(script)
        return path.read_text() if path.is_file() else shipped_script(script)

    def generate(self, patterns='', *args):
        """
        Entry point for subcommand ``./manage.py stewart generate``.
        """
        from stewart.words import PatternSeq, stewart_prefix, toeplitz_prefix

        if args:
            raise UsageError("generate takes a single pattern sequence.")
        length, fill = self.options['length'], self.options['fill']
        try:
            if '(' in patterns:
                if length is None:
                    raise UsageError("An ultimately periodic sequence requires --len.")
                return stewart_prefix(patterns, length, fill)
            word = toeplitz_prefix(PatternSeq.from_string(patterns)).symbols
        except UnresolvedHole as exc:
            raise UsageError(str(exc))
        return word if length is None else word[:length]

    def evaluate(self, *formula):
        """
        Entry point for subcommand ``./manage.py stewart eval``.
        """
        from stewart.models import StoredAutomaton
        from stewart.prover.script import Statement, execute, run_script
        from stewart.serializers import QueryResultSerializer

        session = self.session()
        if self.options['script']:
            if formula:
                raise UsageError("Pass either a formula or --script, not both.")
            results = run_script(self.script_text(), session)
        elif formula:
            results = [execute(Statement('eval', 'query', ' '.join(formula)), session)]
        else:
            raise UsageError("Nothing to evaluate; pass a formula or --script.")
        if self.options['save']:
            for result in results:
                if result.kind in ('def', 'reg'):
                    predicate = session.predicates[result.name]
                    StoredAutomaton.objects.store(result.name, predicate.automaton, predicate.variables)
        if self.options['output_format'] == 'json':
            output = self.render(QueryResultSerializer(results, many=True).data)
        else:
            output = '\n'.join(str(result) for result in results)
        expect = self.options['expect']
        if expect is not None:
            wrong = [r.name for r in results if r.value is not None and r.value != (expect == 'true')]
            if wrong:
                self.write(output)
                raise PropertyViolated("Not {}: {}".format(expect.upper(), ', '.join(wrong)))
        return output

    def check(self, *identifiers):
        """
        Entry point for subcommand ``./manage.py stewart check``.
        """
        from stewart.serializers import CheckReportSerializer
        from stewart.theorems.pool import theorem_checks_pool

        if not identifiers or identifiers == ('all',):
            checks = theorem_checks_pool.get_all_checks()
        else:
            checks = [theorem_checks_pool.get_check(identifier) for identifier in identifiers]
        reports = [check.run(self.options['length'], self.options['seed']) for check in checks]
        if self.options['output_format'] == 'json':
            output = self.render(CheckReportSerializer(reports, many=True).data)
        else:
            output = '\n'.join(str(report) for report in reports)
        failed = [report.identifier for report in reports if not report.passed]
        if failed:
            self.write(output)
            raise PropertyViolated("Failed checks: {}".format(', '.join(failed)))
        return output

    def export(self, name=None, *args):
        """
        Entry point for subcommand ``./manage.py stewart export``.
        """
        from stewart.automata.dot import export_dot
        from stewart.automata.walnut import write_walnut
        from stewart.models import StoredAutomaton
        from stewart.prover.script import run_script

        if name is None or args:
            raise UsageError("export takes the name of a single automaton.")
        session = self.session()
        if self.options['script']:
            run_script(self.script_text(), session)
        if name in session.words:
            automaton = session.words[name]
        elif name in session.predicates:
            automaton = session.predicates[name].automaton
        else:
            automaton = StoredAutomaton.objects.load(name).automaton
        output_format = self.options['output_format'] or 'walnut'
        if output_format == 'walnut':
            return write_walnut(automaton)
        if output_format == 'dot':
            return export_dot(automaton, name)
        raise UsageError(str(PreconditionError("Unknown export format '{}'.".format(output_format))))
