"""
Command-line interface for the regular-language witness toolkit
"""
import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

# Add src to path to import our modules
current_dir = Path(__file__).parent
project_root = current_dir.parent
sys.path.append(str(project_root / "src"))

from automata.automaton import Automaton, PointedAutomaton
from automata.minimization import is_regular, minimal_automaton
from automata.operations import equivalent
from bridge.witnesses import four_witnesses, verify_bridge
from language.alphabet import Alphabet
from language.parser import parse_regex
from language.regex import Language
from monoids.monoid import render_cayley_table
from monoids.transition import monoid_recognizes, syntactic_monoid, transition_monoid
from profinite.clopen import ClopenRecognizer, clopen_pullback, separate
from profinite.omega import eval_omega_term, parse_omega_term
from serialization.dot_export import to_dot
from serialization.json_codec import (
    approx_to_json, automaton_from_json, automaton_to_json, dumps, language_to_json, load_file,
    monoid_to_json, recognizer_from_json, report_to_json, system_from_json,
)
from sigma_sets.orbits import counter_presentation, language_presentation, orbit, resolve_bound
from sigma_sets.sigma_set import moore_behaviour
from utils.config import CLI_CONFIG, VERIFICATION_CONFIG
from utils.helpers import format_word, setup_logging
from verification.criteria import AcceptanceRunner, VerificationSettings, summarize

logger = setup_logging(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_VERIFICATION_FAILED = 2

# A handler returns the rendered output and the exit code
Outcome = Tuple[str, int]


class UsageError(Exception):
    """A flag combination argparse cannot rule out by itself"""


def _alphabet(args) -> Alphabet:
    if not args.alphabet:
        raise UsageError(f"{args.command} needs --alphabet")
    return Alphabet.from_string(args.alphabet)


def _declared_alphabet(args) -> Optional[Alphabet]:
    """--alphabet when given; files without an alphabet key fall back to it"""
    return Alphabet.from_string(args.alphabet) if args.alphabet else None


def _language(args, text: str) -> Language:
    return parse_regex(text, _alphabet(args))


def _max_length(args) -> int:
    return VERIFICATION_CONFIG["sample_max_length"] if args.max_length is None else args.max_length


def _require_format(args, *allowed: str):
    if args.format not in allowed:
        raise UsageError(f"{args.command} supports --format {'|'.join(allowed)}, not {args.format}")


def _load_automaton(path: str) -> Automaton:
    loaded = automaton_from_json(load_file(path))
    return loaded.automaton if isinstance(loaded, PointedAutomaton) else loaded


# --- handlers -----------------------------------------------------------------

def cmd_derive(args) -> Outcome:
    _require_format(args, "text", "json")
    derived = _language(args, args.regex).word_derivative(args.word)
    if args.format == "json":
        return dumps(language_to_json(derived)), EXIT_OK
    return str(derived), EXIT_OK


def cmd_member(args) -> Outcome:
    _require_format(args, "text", "json")
    member = _language(args, args.regex).contains(args.word)
    if args.format == "json":
        return dumps({"regex": args.regex, "word": args.word, "member": member}), EXIT_OK
    return "yes" if member else "no", EXIT_OK


def cmd_equiv(args) -> Outcome:
    _require_format(args, "text", "json")
    result = equivalent(minimal_automaton(_language(args, args.first)),
                        minimal_automaton(_language(args, args.second)))
    code = EXIT_OK if result.equivalent else EXIT_VERIFICATION_FAILED
    if args.format == "json":
        return dumps({"equivalent": result.equivalent, "counterexample": result.counterexample}), code
    if result.equivalent:
        return "equivalent", code
    return f"not equivalent; counterexample: {format_word(result.counterexample)}", code


def cmd_min(args) -> Outcome:
    dfa = minimal_automaton(_language(args, args.regex))
    if args.format == "dot":
        return to_dot(dfa, "minimal"), EXIT_OK
    if args.format == "json":
        return dumps(automaton_to_json(dfa)), EXIT_OK
    lines = [f"{dfa.size} states, start {dfa.carrier.states[dfa.start]}"]
    for q, name in enumerate(dfa.carrier.states):
        moves = ", ".join(f"{symbol}->{dfa.carrier.states[dfa.carrier.step(q, symbol)]}"
                          for symbol in dfa.alphabet)
        marker = "*" if dfa.automaton.is_accepting(q) else " "
        lines.append(f"{marker} {name}: {moves}")
    return "\n".join(lines), EXIT_OK


def cmd_orbit(args) -> Outcome:
    _require_format(args, "text", "json")
    if args.example == "anbn":
        presentation = counter_presentation()
    elif args.regex is not None:
        presentation = language_presentation(_language(args, args.regex))
    else:
        raise UsageError("orbit needs a regex or --example anbn")
    explored = orbit(presentation.sigma_set, presentation.state, args.bound)
    verdict = is_regular(presentation, args.bound)
    if args.format == "json":
        document = {
            "status": "finite" if explored.is_finite else "exceeded-bound",
            "visited": explored.visited,
            "bound": resolve_bound(args.bound),
            "regular": verdict.is_regular,
        }
        if explored.is_finite:
            document["states"] = [str(s) for s in explored.states]
        return dumps(document), EXIT_OK
    lines = [str(explored), str(verdict)]
    if explored.is_finite:
        lines.extend(f"  {s}" for s in explored.states)
    return "\n".join(lines), EXIT_OK


def cmd_moore(args) -> Outcome:
    _require_format(args, "text", "json")
    automaton = _load_automaton(args.automaton)
    carrier = automaton.carrier
    if args.output == "accept":
        accepting = set(automaton.accepting_names())
        output = lambda name: name in accepting
    else:
        output = str
    behaviour = moore_behaviour(carrier, output, args.state, _max_length(args))
    if args.format == "json":
        return dumps({"state": carrier.states[carrier.resolve(args.state)], "behaviour": behaviour}), EXIT_OK
    return "\n".join(f"{format_word(w)}\t{value}" for w, value in behaviour.items()), EXIT_OK


def cmd_synt(args) -> Outcome:
    _require_format(args, "text", "json")
    recognizer = syntactic_monoid(_language(args, args.regex))
    if args.format == "json":
        return dumps(monoid_to_json(recognizer)), EXIT_OK
    monoid = recognizer.monoid
    accepting = ", ".join(monoid.name(x) for x in sorted(recognizer.accepting))
    return f"{monoid.size} elements, accepting {{{accepting}}}\n{render_cayley_table(monoid)}", EXIT_OK


def cmd_tmon(args) -> Outcome:
    _require_format(args, "text", "json")
    sigma_monoid = transition_monoid(_load_automaton(args.automaton).carrier)
    if args.format == "json":
        return dumps(monoid_to_json(sigma_monoid)), EXIT_OK
    return f"{sigma_monoid.size} elements\n{render_cayley_table(sigma_monoid.monoid)}", EXIT_OK


def cmd_recognize(args) -> Outcome:
    _require_format(args, "text", "json")
    recognizer = recognizer_from_json(load_file(args.monoid), _declared_alphabet(args))
    result = monoid_recognizes(recognizer, parse_regex(args.regex, recognizer.alphabet))
    code = EXIT_OK if result.equivalent else EXIT_VERIFICATION_FAILED
    if args.format == "json":
        return dumps({"recognizes": result.equivalent, "counterexample": result.counterexample}), code
    if result.equivalent:
        return "recognizes", code
    return f"does not recognize; counterexample: {format_word(result.counterexample)}", code


def cmd_profinite_eval(args) -> Outcome:
    _require_format(args, "text", "json")
    system = system_from_json(load_file(args.system), _declared_alphabet(args))
    approx = eval_omega_term(system, parse_omega_term(args.term, system.alphabet))
    if args.format == "json":
        return dumps(approx_to_json(approx)), EXIT_OK
    return "\n".join(f"node {i}: {name}" for i, name in enumerate(approx.named_components())), EXIT_OK


def cmd_pullback(args) -> Outcome:
    _require_format(args, "text", "json")
    recognizer = recognizer_from_json(load_file(args.monoid), _declared_alphabet(args))
    pulled = clopen_pullback(ClopenRecognizer.from_recognizer(recognizer))
    if args.format == "json":
        return dumps(language_to_json(pulled)), EXIT_OK
    return str(pulled), EXIT_OK


def cmd_separate(args) -> Outcome:
    _require_format(args, "text", "json")
    result = separate(_language(args, args.first), _language(args, args.second))
    if args.format == "json":
        document = {"equal": result.equal, "witness": result.witness}
        if not result.equal:
            document["clopen"] = monoid_to_json(result.clopen.as_recognizer())
        return dumps(document), EXIT_OK
    if result.equal:
        return "equal; no separating clopen", EXIT_OK
    return (f"separated by a clopen over a {result.clopen.node.size}-element monoid; "
            f"witness: {format_word(result.witness)}"), EXIT_OK


def cmd_bridge(args) -> Outcome:
    _require_format(args, "text", "json")
    language = _language(args, args.regex)
    report = verify_bridge(four_witnesses(language), language, _max_length(args))
    code = EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED
    if args.format == "json":
        return dumps(report_to_json(report)), code
    return report.render_text(), code


def cmd_verify(args) -> Outcome:
    _require_format(args, "text", "json")
    settings = VerificationSettings(progress=not args.quiet)
    if args.seed is not None:
        settings.seed = args.seed
    if args.max_length is not None:
        settings.sample_max_length = args.max_length
    if args.bound is not None:
        settings.anbn_bound = args.bound
    if args.corpus_size is not None:
        settings.corpus_size = args.corpus_size
        settings.bridge_corpus_size = args.corpus_size
    results = AcceptanceRunner(settings).run(args.criteria)
    code = EXIT_OK if all(r.passed for r in results) else EXIT_VERIFICATION_FAILED
    if args.format == "json":
        rows = [
            {"criterion": r.number, "name": r.name, "checked": r.checked, "failed": r.failed,
             "unknown": r.unknown, "passed": r.passed, "failures": r.failures}
            for r in results
        ]
        return dumps({"criteria": rows}), code
    lines = [summarize(results).to_string(index=False)]
    for result in results:
        lines.extend(f"criterion {result.number}: {detail}" for detail in result.failures)
    return "\n".join(lines), code


HANDLERS: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "derive": cmd_derive,
    "member": cmd_member,
    "equiv": cmd_equiv,
    "min": cmd_min,
    "orbit": cmd_orbit,
    "moore": cmd_moore,
    "synt": cmd_synt,
    "tmon": cmd_tmon,
    "recognize": cmd_recognize,
    "profinite-eval": cmd_profinite_eval,
    "pullback": cmd_pullback,
    "separate": cmd_separate,
    "bridge": cmd_bridge,
    "verify": cmd_verify,
}


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", help="alphabet symbols, e.g. 'ab'")
    common.add_argument("--bound", type=_positive_int, help="orbit exploration bound")
    common.add_argument("--format", choices=CLI_CONFIG["formats"], default=CLI_CONFIG["default_format"])
    common.add_argument("--seed", type=int, help="random seed for verification runs")
    common.add_argument("--out", type=Path, help="write output to this file instead of stdout")
    common.add_argument("--max-length", dest="max_length", type=int, help="longest word in membership samples")

    parser = argparse.ArgumentParser(
        prog="reglang",
        description="Compute and cross-check derivatives, automata, monoids and profinite recognizers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", parents=[common], help="word derivative of a regex")
    p.add_argument("regex")
    p.add_argument("word")

    p = sub.add_parser("member", parents=[common], help="membership of a word")
    p.add_argument("regex")
    p.add_argument("word")

    p = sub.add_parser("equiv", parents=[common], help="language equivalence with counterexample")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("min", parents=[common], help="minimal automaton")
    p.add_argument("regex")

    p = sub.add_parser("orbit", parents=[common], help="derivative orbit and regularity verdict")
    p.add_argument("regex", nargs="?")
    p.add_argument("--example", choices=("anbn",), help="use a built-in presentation instead of a regex")

    p = sub.add_parser("moore", parents=[common], help="behaviour of a state of an automaton file")
    p.add_argument("automaton")
    p.add_argument("state")
    p.add_argument("--output", choices=("name", "accept"), default="accept")

    p = sub.add_parser("synt", parents=[common], help="syntactic monoid of a regex")
    p.add_argument("regex")

    p = sub.add_parser("tmon", parents=[common], help="transition monoid of an automaton file")
    p.add_argument("automaton")

    p = sub.add_parser("recognize", parents=[common], help="check a monoid recognizer file against a regex")
    p.add_argument("monoid")
    p.add_argument("regex")

    p = sub.add_parser("profinite-eval", parents=[common], help="evaluate an ω-term over a system file")
    p.add_argument("system")
    p.add_argument("term")

    p = sub.add_parser("pullback", parents=[common], help="regex recognized by a monoid recognizer file")
    p.add_argument("monoid")

    p = sub.add_parser("separate", parents=[common], help="clopen separating two regexes")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("bridge", parents=[common], help="build and cross-check the four witnesses")
    p.add_argument("regex")

    p = sub.add_parser("verify", parents=[common], help="run the acceptance criteria")
    p.add_argument("--criteria", type=int, nargs="+", help="criterion numbers to run (default: all)")
    p.add_argument("--corpus-size", dest="corpus_size", type=_positive_int)
    p.add_argument("--quiet", action="store_true", help="hide progress bars")
    return parser


def _emit(text: str, out: Optional[Path]):
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, dispatch one subcommand and return its exit code

    Exit codes: 0 on success, 1 on a domain error (bad regex, malformed
    file, ...), 2 on a failed verification or a usage error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        text, code = HANDLERS[args.command](args)
        _emit(text, args.out)
        return code
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except (ValueError, OSError) as e:
        logger.debug(f"{args.command} failed: {e!r}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
