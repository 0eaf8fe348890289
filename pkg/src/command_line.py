"""
Command-line surface.

Every command prints a deterministic report on stdout.  Exit codes: 0 for
success (or "equivalent"), 1 for "not equivalent", 2 for invalid input, 3 for
an internal error.
"""
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from PyQt6.QtCore import QCommandLineOption, QCommandLineParser

from .band_analysis import bands
from .coloring import Coloring, check_admissible, link_corner_numbers, strip_peripherals, weight
from .curve_engine import components, trace
from .errors import DehnslideError, InvariantViolation
from .formats import format_coloring, format_triangulation, parse_inputs
from .link_renderer import render_link
from .logger_config import setup_logging
from .oracles import random_representative, torus_slope
from .reducer import equivalent, minimal_set, reduce, replay_path, unique_minimizer
from .settings import AppSettings
from .slide_engine import all_slides
from .slide_history import SlideHistory
from .surface_model import antipodal_edges, punctured_torus, standard_surface

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3

COMMANDS_HELP = """Commands:
  validate <tri>                        check a triangulation file
  gen --genus g                         print the standard genus-g triangulation
  analyze <tri> <col> [--slides] [--replay p1,p2,... [--rewind n]]
                                        corner numbers, bands, components
  reduce <tri> <col>                    greedy reduction to least weight
  minset <tri> <col>                    all least-weight representatives
  equiv <tri> <colA> <colB>             decide equivalence on the closed surface
  random-rep <tri> <col> --steps k --seed s
                                        slide pseudo-randomly chosen bands
  render <tri> <col> [--format svg] [--output file] [--size px]
                                        SVG schematic of the vertex link
  settings [--log-level L] [--render-size px] [--log-file on|off]
                                        show or change stored defaults

Any one input file may be - to read it from standard input.
"""


class UsageError(ValueError):
    pass


def _fmt(f: Coloring) -> str:
    return format_coloring(f).strip()


def _path_text(starts: Sequence[int]) -> str:
    return ",".join(str(s) for s in starts) if starts else "(none)"


class CommandLine:
    """Parses ``argv`` and dispatches to one handler per command."""

    def __init__(self, out: TextIO = None, err: TextIO = None, settings: Optional[AppSettings] = None):
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.settings = settings
        self.parser = QCommandLineParser()
        self.parser.setApplicationDescription("Handleslide reduction of simple diagrams on once-punctured surfaces.")
        self.parser.setOptionsAfterPositionalArgumentsMode(
            QCommandLineParser.OptionsAfterPositionalArgumentsMode.ParseAsOptions)
        self.options = {
            "help": QCommandLineOption(["h", "help"], "Show this help."),
            "slides": QCommandLineOption("slides", "analyze: list the slide of every maximal band."),
            "replay": QCommandLineOption("replay", "analyze: replay band starts before analyzing.", "starts"),
            "rewind": QCommandLineOption("rewind", "analyze: take back the last n replayed commands.", "n"),
            "genus": QCommandLineOption("genus", "gen: surface genus.", "g"),
            "steps": QCommandLineOption("steps", "random-rep: number of slides.", "k", "5"),
            "seed": QCommandLineOption("seed", "random-rep: generator seed.", "s", "0"),
            "format": QCommandLineOption("format", "render: output format.", "fmt", "svg"),
            "output": QCommandLineOption(["o", "output"], "render: write to this file.", "file"),
            "size": QCommandLineOption("size", "render: image size in pixels.", "px"),
            "log-level": QCommandLineOption("log-level", "Console log level (settings: store it).", "level"),
            "no-log-file": QCommandLineOption("no-log-file", "Do not write the rotating log file."),
            "render-size": QCommandLineOption("render-size", "settings: store the default render size.", "px"),
            "log-file": QCommandLineOption("log-file", "settings: store whether to write a log file.", "on|off"),
        }
        for option in self.options.values():
            self.parser.addOption(option)
        self.parser.addPositionalArgument("command", "One of the commands below.")

        self.handlers: Dict[str, Callable[[List[str]], int]] = {
            "validate": self.cmd_validate,
            "gen": self.cmd_gen,
            "analyze": self.cmd_analyze,
            "reduce": self.cmd_reduce,
            "minset": self.cmd_minset,
            "equiv": self.cmd_equiv,
            "random-rep": self.cmd_random_rep,
            "render": self.cmd_render,
            "settings": self.cmd_settings,
        }

    # --- helpers ---

    def print(self, text: str = ""):
        print(text, file=self.out)

    def _value(self, name: str) -> Optional[str]:
        option = self.options[name]
        return self.parser.value(option) if self.parser.isSet(option) else None

    def _int(self, name: str, minimum: int = 0) -> int:
        raw = self.parser.value(self.options[name])
        try:
            value = int(raw)
        except ValueError:
            raise UsageError(f"--{name} expects an integer, got {raw!r}") from None
        if value < minimum:
            raise UsageError(f"--{name} must be at least {minimum}, got {value}")
        return value

    @staticmethod
    def _expect(args: List[str], count: int, usage: str):
        if len(args) != count:
            raise UsageError(f"usage: {usage}")

    def _app_settings(self) -> AppSettings:
        if self.settings is None:
            self.settings = AppSettings()
        return self.settings

    def _configure_logging(self, command: str):
        stored = self._app_settings()
        level = stored.log_level
        if command != "settings" and self._value("log-level"):
            level = self._value("log-level").upper()
        setup_logging(level=level, log_to_file=stored.log_file_enabled and not self.parser.isSet(self.options["no-log-file"]))

    # --- entry point ---

    def run(self, argv: Sequence[str]) -> int:
        if not self.parser.parse(list(argv)):
            print(f"error: {self.parser.errorText()}", file=self.err)
            return EXIT_INVALID
        positional = self.parser.positionalArguments()
        if self.parser.isSet(self.options["help"]):
            self.print(self.parser.helpText())
            self.print(COMMANDS_HELP)
            return EXIT_OK
        if not positional:
            print(f"error: no command given\n\n{COMMANDS_HELP}", file=self.err)
            return EXIT_INVALID

        command, args = positional[0], positional[1:]
        handler = self.handlers.get(command)
        if handler is None:
            print(f"error: unknown command {command!r}", file=self.err)
            return EXIT_INVALID
        try:
            self._configure_logging(command)
            logger.info(f"Running '{command}' with {args}")
            return handler(args)
        except InvariantViolation as e:
            logger.error(f"Internal error while running '{command}': {e}", exc_info=True)
            print(f"internal error: {e}", file=self.err)
            return EXIT_INTERNAL
        except (DehnslideError, ValueError) as e:
            logger.info(f"'{command}' rejected its input: {e}")
            print(f"error: {e}", file=self.err)
            return EXIT_INVALID

    # --- commands ---

    def cmd_validate(self, args: List[str]) -> int:
        self._expect(args, 1, "validate <tri>")
        tri, _ = parse_inputs(args)
        antipodal = sorted(antipodal_edges(tri))
        self.print(f"valid: {tri.triangle_count} triangles, {tri.edge_count} edges, "
                   f"genus {tri.genus}, link length {tri.link_size}")
        self.print(f"antipodal edges: {', '.join(map(str, antipodal)) if antipodal else 'none'}")
        return EXIT_OK

    def cmd_gen(self, args: List[str]) -> int:
        self._expect(args, 0, "gen --genus g")
        if self._value("genus") is None:
            raise UsageError("usage: gen --genus g")
        self.out.write(format_triangulation(standard_surface(self._int("genus", minimum=1))))
        return EXIT_OK

    def cmd_analyze(self, args: List[str]) -> int:
        self._expect(args, 2, "analyze <tri> <col> [--slides] [--replay p1,p2,... [--rewind n]]")
        tri, (f,) = parse_inputs(args)

        replay = self._value("replay")
        rewind = self._int("rewind") if self._value("rewind") else 0
        if rewind and replay is None:
            raise UsageError("--rewind needs --replay")
        if replay is not None:
            try:
                starts = [int(s) for s in replay.split(",") if s.strip()]
            except ValueError:
                raise UsageError(f"--replay expects comma-separated band starts, got {replay!r}") from None
            history = SlideHistory()
            history.command_executed.connect(lambda command: self.print(f"replay: {command.description}"))
            history.command_rewound.connect(lambda command: self.print(f"rewound: {command.description}"))
            f = replay_path(tri, f, starts, history=history, rewind=rewind)
            self.print(f"replayed to: {_fmt(f)}")
            self.print(f"replay path: {_path_text(history.path())}")

        stripped, count = strip_peripherals(tri, f)
        self.print(f"coloring: {_fmt(f)}")
        self.print(f"weight: {weight(f)}")
        self.print(f"admissible: {check_admissible(tri, f)}")
        self.print(f"peripheral components: {count}")
        if count:
            self.print(f"stripped: {_fmt(stripped)}")
        self.print(f"corner numbers: {' '.join(map(str, link_corner_numbers(tri, stripped)))}")

        found = components(trace(tri, stripped))
        self.print(f"components: {len(found)}")
        for index, component in enumerate(found):
            self.print(f"  component {index}: {_fmt(component.coloring)}")
        if tri == punctured_torus():
            slope = torus_slope(tri, stripped)
            self.print(f"slope: ({slope.p}, {slope.q}), multiplicity {slope.multiplicity}")

        current = bands(tri, stripped) or []
        self.print(f"bands: {len(current)}")
        for band in current:
            self.print(f"  {band}")
        if self.parser.isSet(self.options["slides"]):
            for band, result in all_slides(tri, stripped):
                self.print(f"  slide at {band.start}: -> {_fmt(result.coloring)}, "
                           f"delta {result.delta}, cascades {result.cascades}")
        return EXIT_OK

    def cmd_reduce(self, args: List[str]) -> int:
        self._expect(args, 2, "reduce <tri> <col>")
        tri, (f,) = parse_inputs(args)
        result = reduce(tri, f)
        self.print(f"input: {_fmt(result.initial)} (weight {weight(result.initial)})")
        self.print(f"peripheral components: {result.peripheral_count}")
        for number, step in enumerate(result.steps, start=1):
            marker = " [plateau]" if step.plateau else ""
            self.print(f"step {number}: band at {step.band.start} ({step.band.kind.value}, k={step.band.length}) "
                       f"delta {step.delta} -> {_fmt(step.coloring)}{marker}")
        self.print(f"final: {_fmt(result.final)} (weight {weight(result.final)})")
        self.print(f"path: {_path_text(result.path)}")
        self.print(f"plateau search used: {'yes' if result.plateau_used else 'no'}")
        return EXIT_OK

    def cmd_minset(self, args: List[str]) -> int:
        self._expect(args, 2, "minset <tri> <col>")
        tri, (f,) = parse_inputs(args)
        found = minimal_set(tri, f)
        self.print(f"weight: {found.weight}")
        self.print(f"members: {len(found.colorings)}")
        for member in found.colorings:
            self.print(f"  {_fmt(member)}  moves: {_path_text(found.moves[member])}")
        self.print(f"uniqueness: {unique_minimizer(tri, f)}")
        return EXIT_OK

    def cmd_equiv(self, args: List[str]) -> int:
        self._expect(args, 3, "equiv <tri> <colA> <colB>")
        tri, (f, g) = parse_inputs(args)
        verdict = equivalent(tri, f, g)
        first, second = verdict.peripheral_counts
        if not verdict.equivalent:
            reason = (f"peripheral counts {first} vs {second}" if first != second
                      else "distinct least-weight representatives")
            self.print(f"not equivalent ({reason})")
            return EXIT_NOT_EQUIVALENT
        certificate = verdict.certificate
        self.print("equivalent")
        self.print(f"peripheral components: {first}")
        self.print(f"common representative: {_fmt(certificate.target)}")
        self.print(f"replay A: {_path_text(certificate.first_path)}")
        self.print(f"replay B: {_path_text(certificate.second_path)}")
        return EXIT_OK

    def cmd_random_rep(self, args: List[str]) -> int:
        self._expect(args, 2, "random-rep <tri> <col> --steps k --seed s")
        tri, (f,) = parse_inputs(args)
        result = random_representative(tri, f, self._int("steps"), self._int("seed"))
        self.out.write(format_coloring(result))
        return EXIT_OK

    def cmd_render(self, args: List[str]) -> int:
        self._expect(args, 2, "render <tri> <col> [--format svg] [--output file]")
        tri, (f,) = parse_inputs(args)
        size = self._int("size", minimum=64) if self._value("size") else self._app_settings().render_size
        document = render_link(tri, f, format=self.parser.value(self.options["format"]), size=size)
        output = self._value("output")
        if output:
            Path(output).write_text(document, encoding="utf-8")
            self.print(f"wrote {output}")
        else:
            self.out.write(document)
        return EXIT_OK

    def cmd_settings(self, args: List[str]) -> int:
        self._expect(args, 0, "settings [--log-level L] [--render-size px] [--log-file on|off]")
        stored = self._app_settings()
        if self._value("log-level"):
            stored.log_level = self._value("log-level")
        if self._value("render-size"):
            stored.render_size = self._int("render-size", minimum=64)
        if self._value("log-file"):
            choice = self._value("log-file").lower()
            if choice not in ("on", "off"):
                raise UsageError(f"--log-file expects on or off, got {choice!r}")
            stored.log_file_enabled = choice == "on"
        stored.sync()
        for key, value in stored.as_dict().items():
            self.print(f"{key} = {value}")
        return EXIT_OK


def main(argv: Sequence[str] = None, settings: Optional[AppSettings] = None) -> int:
    return CommandLine(settings=settings).run(list(argv if argv is not None else sys.argv))
