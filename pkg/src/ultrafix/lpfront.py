# Copyright (c) 2020, Novo Nordisk Foundation Center for Biosustainability,
# Technical University of Denmark.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Normal logic programs: parsing, grounding, levels and supported models.

Programs are function-free. A clause reads ``h :- b1, ..., not c1, ... .``,
a fact ``h.``, and ``#atom p.`` adds ``p`` to the Herbrand base without a
clause. Text after ``%`` is a comment.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Tuple

import networkx as nx
from lark import Lark, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, VisitError

from .exceptions import (
    BaseMismatch,
    BaseTooLarge,
    GroundingError,
    NotLocallyHierarchical,
    ProgramSyntaxError,
)
from .herbrand import HerbrandSpace, LevelMap
from .solver import Endofunction, solve_fixed_point


logger = logging.getLogger(__name__)


################################################################################
# Syntax                                                                       #
################################################################################


@dataclass(frozen=True)
class Atom:
    predicate: str
    arguments: Tuple[str, ...] = ()

    def __str__(self):
        if not self.arguments:
            return self.predicate
        return f"{self.predicate}({','.join(self.arguments)})"

    def variables(self):
        return [term for term in self.arguments if is_variable(term)]

    def substitute(self, binding):
        return Atom(
            self.predicate,
            tuple(binding.get(term, term) for term in self.arguments),
        )


def is_variable(term):
    return term[0].isupper() or term[0] == "_"


@dataclass(frozen=True)
class Clause:
    head: Atom
    positive_body: Tuple[Atom, ...] = ()
    negative_body: Tuple[Atom, ...] = ()

    def atoms(self):
        return (self.head,) + self.positive_body + self.negative_body


@dataclass(frozen=True)
class Program:
    clauses: Tuple[Clause, ...]
    declarations: Tuple[Atom, ...] = ()

    def constants(self):
        """Return the constants mentioned anywhere in the program."""
        atoms = list(self.declarations)
        for clause in self.clauses:
            atoms.extend(clause.atoms())
        return sorted(
            {
                term
                for atom in atoms
                for term in atom.arguments
                if not is_variable(term)
            }
        )


class _ProgramTransformer(Transformer):
    def program(self, statements):
        return Program(
            tuple(s for s in statements if isinstance(s, Clause)),
            tuple(s for s in statements if isinstance(s, Atom)),
        )

    def declaration(self, children):
        directive, atom = children
        if directive != "#atom":
            raise ProgramSyntaxError(
                f"Unknown directive '{directive}'",
                directive.line,
                directive.column,
            )
        return atom

    def clause(self, children):
        head, body = children
        positive, negative = [], []
        for is_negative, atom in body or ():
            target = negative if is_negative else positive
            if atom not in target:
                target.append(atom)
        return Clause(head, tuple(positive), tuple(negative))

    def body(self, literals):
        return literals

    def positive(self, children):
        return False, children[0]

    def negative(self, children):
        return True, children[1]

    def atom(self, children):
        name, terms = children
        return Atom(str(name), tuple(terms or ()))

    def terms(self, children):
        return [str(term) for term in children]

    def compound(self, children):
        functor = children[0]
        raise ProgramSyntaxError(
            f"Function symbols are not supported ('{functor}')",
            functor.line,
            functor.column,
        )


_program_parser = Lark(
    r"""
    program: _statement*
    _statement: clause | declaration
    declaration: DIRECTIVE atom "."
    clause: atom [":-" body] "."
    body: literal ("," literal)*
    literal: atom -> positive
           | NOT atom -> negative
    atom: _name ["(" terms ")"]
    _name: NAME | NOT
    terms: _term ("," _term)*
    _term: NAME | VARIABLE | NUMBER | compound
    compound: NAME "(" terms ")"

    NOT: "not"
    NAME: /[a-z][A-Za-z0-9_]*/
    VARIABLE: /[A-Z_][A-Za-z0-9_]*/
    NUMBER: /-?[0-9]+/
    DIRECTIVE: /#[a-z]+/
    COMMENT: /%[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
    """,
    start="program",
    parser="lalr",
    maybe_placeholders=True,
)


def _syntax_error(error):
    if isinstance(error, UnexpectedCharacters):
        return ProgramSyntaxError(
            f"Unexpected character {error.char!r}", error.line, error.column
        )
    token = getattr(error, "token", None)
    if token is not None and token.type == "$END":
        # The end marker borrows the position of the last token read.
        line = token.end_line or error.line
        column = token.end_column or error.column
        return ProgramSyntaxError("Unexpected end of input", line, column)
    shown = token if token is not None else "input"
    return ProgramSyntaxError(f"Unexpected '{shown}'", error.line, error.column)


def parse_program(text):
    """
    Parse the text of a normal logic program.

    Raises ``ProgramSyntaxError`` carrying the line and column of the
    offending token; terms with arguments (function symbols) are rejected.
    """
    try:
        program = _ProgramTransformer().transform(_program_parser.parse(text))
    except UnexpectedInput as error:
        raise _syntax_error(error) from error
    except VisitError as error:
        raise error.orig_exc from error
    logger.debug(
        f"Parsed {len(program.clauses)} clauses and "
        f"{len(program.declarations)} declarations"
    )
    return program


################################################################################
# Ground programs                                                              #
################################################################################


@dataclass(frozen=True)
class GroundClause:
    head: str
    positive_body: frozenset = frozenset()
    negative_body: frozenset = frozenset()


@dataclass(frozen=True)
class GroundProgram:
    clauses: Tuple[GroundClause, ...]
    base: frozenset

    def __post_init__(self):
        atoms = set(self.base)
        for clause in self.clauses:
            atoms.add(clause.head)
            atoms.update(clause.positive_body, clause.negative_body)
        object.__setattr__(self, "base", frozenset(atoms))


def ground_program(program, constants):
    """
    Instantiate every variable with every constant.

    Raises ``GroundingError`` if a clause has variables but there are no
    constants to range over.
    """
    constants = sorted(set(constants))
    clauses = []
    base = set()

    def instances(atoms):
        variables = list(
            dict.fromkeys(v for atom in atoms for v in atom.variables())
        )
        if variables and not constants:
            raise GroundingError(
                f"Variables {variables} but no constants to ground them with"
            )
        for values in itertools.product(constants, repeat=len(variables)):
            yield dict(zip(variables, values))

    for clause in program.clauses:
        for binding in instances(clause.atoms()):
            clauses.append(
                GroundClause(
                    str(clause.head.substitute(binding)),
                    frozenset(
                        str(a.substitute(binding)) for a in clause.positive_body
                    ),
                    frozenset(
                        str(a.substitute(binding)) for a in clause.negative_body
                    ),
                )
            )
    for atom in program.declarations:
        for binding in instances([atom]):
            base.add(str(atom.substitute(binding)))
    ground = GroundProgram(tuple(dict.fromkeys(clauses)), frozenset(base))
    logger.info(
        f"Grounded {len(program.clauses)} clauses into "
        f"{len(ground.clauses)} over a base of {len(ground.base)} atoms"
    )
    return ground


def format_program(ground):
    """Render a ground program in the text format ``parse_program`` reads."""
    lines = [f"#atom {atom}." for atom in sorted(ground.base)]
    for clause in ground.clauses:
        body = sorted(clause.positive_body) + [
            f"not {atom}" for atom in sorted(clause.negative_body)
        ]
        if body:
            lines.append(f"{clause.head} :- {', '.join(body)}.")
        else:
            lines.append(f"{clause.head}.")
    return "\n".join(lines) + "\n"


def dependency_graph(ground):
    """Return the graph with an edge from every body atom to its head."""
    graph = nx.DiGraph()
    graph.add_nodes_from(sorted(ground.base))
    for clause in ground.clauses:
        for atom in clause.positive_body | clause.negative_body:
            graph.add_edge(atom, clause.head)
    return graph


def infer_level_mapping(ground):
    """
    Assign each atom the length of the longest dependency path into it.

    Every clause then has all of its body atoms strictly below its head.
    Raises ``NotLocallyHierarchical`` with a witness cycle if the dependency
    graph is cyclic.
    """
    graph = dependency_graph(ground)
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        pass
    else:
        raise NotLocallyHierarchical([source for source, _ in cycle])
    levels = {}
    for atom in nx.topological_sort(graph):
        levels[atom] = max(
            (levels[body] + 1 for body in graph.predecessors(atom)), default=0
        )
    level_map = LevelMap(levels)
    logger.debug(f"Inferred levels below alpha {level_map.alpha}")
    return level_map


def tp(ground, interpretation):
    """Apply the immediate-consequence operator of the program."""
    if not interpretation <= ground.base:
        unknown = sorted(interpretation - ground.base)
        raise BaseMismatch(f"Atoms {unknown} are not in the Herbrand base")
    return frozenset(
        clause.head
        for clause in ground.clauses
        if clause.positive_body <= interpretation
        and not clause.negative_body & interpretation
    )


def consequence_operator(ground):
    return Endofunction(
        lambda interpretation: tp(ground, interpretation), "T_P"
    )


def solve_supported_model(ground, budget=256, successor_quota=None):
    """
    Construct the unique supported model of a locally hierarchical program.

    Returns the full ``FixResult`` so callers can inspect the trace. The
    budget is raised to ``alpha + 2`` stages if it is lower, which suffices
    for every locally hierarchical program.
    """
    level_map = infer_level_mapping(ground)
    space = HerbrandSpace(level_map)
    budget = max(budget, level_map.alpha + 2)
    result = solve_fixed_point(
        space,
        consequence_operator(ground),
        space.bottom,
        budget,
        successor_quota=successor_quota,
    )
    logger.info(
        f"Supported model has {len(result.fixed_point)} atoms "
        f"({len(result.trace.stages)} stages)"
    )
    return result


def supported_model(ground, budget=256):
    return solve_supported_model(ground, budget).fixed_point


def brute_force_supported_models(ground, limit=20):
    """Return every interpretation fixed by ``tp``, by exhaustive search."""
    if len(ground.base) > limit:
        raise BaseTooLarge(
            f"A base of {len(ground.base)} atoms exceeds the limit of {limit}"
        )
    atoms = sorted(ground.base)
    models = []
    for size in range(len(atoms) + 1):
        for combination in itertools.combinations(atoms, size):
            interpretation = frozenset(combination)
            if tp(ground, interpretation) == interpretation:
                models.append(interpretation)
    return models


def generate_locally_hierarchical_program(n_atoms, seed):
    """
    Generate a random ground program with an acyclic dependency graph.

    Atoms ``p0``, ``p1``, ... are visited in order. Each one is either a
    source, given a fact or nothing at all, or receives one clause whose body
    draws from strictly earlier atoms with random polarity.
    """
    rng = random.Random(seed)
    atoms = [f"p{index}" for index in range(n_atoms)]
    clauses = []
    for index, atom in enumerate(atoms):
        if index == 0 or rng.random() < 0.25:
            if rng.random() < 0.5:
                clauses.append(GroundClause(atom))
            continue
        body = rng.sample(atoms[:index], rng.randint(1, min(3, index)))
        positive = frozenset(a for a in body if rng.random() < 0.5)
        clauses.append(
            GroundClause(atom, positive, frozenset(body) - positive)
        )
    return GroundProgram(tuple(clauses), frozenset(atoms))
