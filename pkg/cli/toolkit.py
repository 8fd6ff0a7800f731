#!/usr/bin/env python3
"""
Moment-Angle Toolkit
Subcommand drivers: resolve inputs, call the library, publish reports
"""

import json
import logging
from typing import Any, Dict, List, Optional, Sequence, TextIO

from cli.config.cli_config import MomentAngleConfig
from cli.reports.cli_reports import REPORT_MANAGERS
from common.algebra.fields import GF2, FieldSpec
from common.config.base_config import Settings
from common.errors import BuildingSetError, InputError, MasseyError
from complexes.complex import SimplicialComplex, is_flag, is_pseudomanifold_sphere, q_connectivity, stanley_reisner_ideal
from complexes.constructions import join_decompose, multiwedge, retraction_report
from complexes.json_format import load_complex
from hochster.tables import compare_fields, multigraded_betti, poincare_duality_check
from massey.families import (canonical_Q_classes, eilenberg_moore_bound, find_nontrivial_triple, q_product_classes,
                             transfer_check, transported_classes, word_class)
from massey.products import massey_product
from nestohedra.building_set import BuildingSet, validate
from nestohedra.families import (expected_pmas_facets, expected_q_facets, family_building_set, family_complex,
                                 fmas_construction, get_family)
from nestohedra.nested_complex import boundary_terms, contraction_intersection_report, nestohedron_nerve
from poly_ring.closure import d_closure, fc_complex, gdfp_check
from poly_ring.identities import family_element, multiwedge_bigrading_check, verify_identity
from poly_ring.polynomials import f_polynomial, h_polynomial, polynomial_json
from poly_ring.ring import PolytopeRegistry
from poly_ring.series import series_build, series_verify
from tor_algebra.classes import CohomologyClass

logger = logging.getLogger(__name__)


def parse_range(text: Optional[str], default: Sequence[int]) -> List[int]:
    """'3' or '2..4'"""
    if text is None:
        return list(default)
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            return list(range(int(low), int(high) + 1))
        return [int(text)]
    except ValueError:
        raise InputError(f"Cannot parse range '{text}'. Please use k or a..b.") from None


def parse_integers(text: Optional[str], flag: str, count: Optional[int] = None) -> List[int]:
    """'1,2,3' as integers; count fixes the number of entries"""
    try:
        values = [int(part) for part in (text or "").split(",") if part.strip()]
    except ValueError:
        raise InputError(f"Cannot parse {flag} '{text}'. Please pass comma-separated integers.") from None
    if count is not None and len(values) != count:
        raise InputError(f"{flag} needs exactly {count} integers, got '{text}'.")
    return values


def parse_classes(K: SimplicialComplex, fieldspec: FieldSpec, text: str) -> List[CohomologyClass]:
    """'v1+v2|u1; ...' : one monomial class v_τ u_σ per ';'-separated item"""
    classes = []
    for item in text.split(";"):
        item = item.strip()
        if "|" not in item:
            raise MasseyError(f"Class '{item}' lacks '|'. Please write v-labels|u-labels.")
        v, u = item.split("|", 1)
        classes.append(word_class(K, fieldspec, [label for label in v.split("+") if label],
                                  [label for label in u.split("+") if label]))
    return classes


def load_building_set(path: str) -> BuildingSet:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        return BuildingSet.from_sets(data["ground"], data["sets"])
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as e:
        raise BuildingSetError(f"Cannot read building set from {path}: {e}. Please provide 'ground' and 'sets'.")


class MomentAngleToolkit:
    """Moment-angle toolkit command dispatcher"""

    def __init__(self, settings: Settings, config: Optional[MomentAngleConfig] = None,
                 as_json: bool = False, stream: Optional[TextIO] = None):
        self.config = config or MomentAngleConfig()
        self.settings = settings
        self.as_json = as_json
        self.reports = {name: manager(self.config, stream) for name, manager in REPORT_MANAGERS.items()}
        self.registry = PolytopeRegistry(settings.nerve_limit, settings.threads)

    def publish(self, command: str, payload: Dict[str, Any]) -> bool:
        payload = {"command": command, **payload}
        return self.reports[command].publish(payload, self.as_json)

    def resolve_complex(self, args: Any) -> SimplicialComplex:
        if getattr(args, "input", None):
            return load_complex(args.input)
        if getattr(args, "family", None) is None or getattr(args, "n", None) is None:
            raise InputError("No complex given. Please pass --input FILE or --family NAME --n N.")
        return family_complex(args.family, args.n)

    def source_name(self, args: Any) -> str:
        if getattr(args, "input", None):
            return str(args.input)
        return f"{get_family(args.family).title}^{args.n}"

    def cmd_complex(self, args: Any) -> int:
        K = self.resolve_complex(args)
        payload: Dict[str, Any] = {
            "source": self.source_name(args),
            "m": K.m,
            "dimension": K.dimension,
            "f_vector": list(K.f_vector),
            "flag": is_flag(K),
            "q_connectivity": q_connectivity(K),
            "sphere": is_pseudomanifold_sphere(K),
        }
        action = args.action
        if action == "nonfaces":
            payload["minimal_nonfaces"] = [list(face) for face in stanley_reisner_ideal(K)]
        elif action == "ideal":
            payload["stanley_reisner_ideal"] = ["".join(f"v{label}" for label in face) for face in stanley_reisner_ideal(K)]
        elif action == "retraction":
            report = retraction_report(K, args.max_size)
            payload["retraction"] = {"passing": len(report["passed"]), "failing": report["failed"]}
        elif action == "decompose":
            payload["factors"] = [{"m": F.m, "dimension": F.dimension, **F.to_json()} for F in join_decompose(K)]
        elif action == "multiwedge":
            J = parse_integers(args.J, "--J") or [1] * K.m
            wedge = multiwedge(K, J)
            payload.update({
                "J": J,
                "wedge_m": wedge.m,
                "wedge_dimension": wedge.dimension,
                "wedge_q_connectivity": q_connectivity(wedge),
                "m_minus_n_preserved": multiwedge_bigrading_check(K, J),
            })
        return 0 if self.publish("complex", payload) else 1

    def cmd_betti(self, args: Any) -> int:
        K = self.resolve_complex(args)
        s = self.settings
        table = multigraded_betti(K, s.field, s.limit, s.threads)
        payload: Dict[str, Any] = {
            "source": self.source_name(args),
            "field": s.field.name,
            "bigraded": [{"-i": i, "2j": j, "rank": r} for (i, j), r in table.bigraded().items()],
            "poincare": str(table.poincare().as_expr()),
            "multigraded": table.to_json(),
        }
        if args.duality:
            payload["duality"] = poincare_duality_check(K, s.field, s.limit)
        if args.compare_fields:
            comparison = compare_fields(K, args.compare_fields, s.limit)
            payload["comparison"] = {"consistent": comparison["consistent"], "torsion": len(comparison["torsion_entries"])}
        return 0 if self.publish("betti", payload) else 1

    def _massey_field(self, strategy: str) -> FieldSpec:
        if strategy == "exhaustive-gf2" and self.settings.field.characteristic != 2:
            logger.info("Switching to GF(2) for exhaustive enumeration")
            return GF2
        return self.settings.field

    def _family_classes(self, args: Any, K: SimplicialComplex, k: int, fieldspec: FieldSpec) -> List[CohomologyClass]:
        family = get_family(args.family).name
        if family == "q":
            if k == args.n:
                return canonical_Q_classes(args.n, fieldspec, K)
            return q_product_classes(args.n, k, fieldspec, K)
        return transported_classes(k, args.n, k, fieldspec, K)

    def _massey_search(self, K: SimplicialComplex, payload: Dict[str, Any]) -> int:
        search = find_nontrivial_triple(K, self.settings.field, self.settings.budget)
        payload["search"] = search.to_json()
        payload["l_em"] = eilenberg_moore_bound(search.report) if search.report is not None else None
        return 0 if self.publish("massey", payload) else 1

    def cmd_massey(self, args: Any) -> int:
        K = self.resolve_complex(args)
        s = self.settings
        strategy = s.strategy
        fieldspec = self._massey_field(strategy)
        payload: Dict[str, Any] = {"source": self.source_name(args), "field": fieldspec.name}
        family = None if getattr(args, "input", None) else get_family(args.family).name
        if args.search or (not args.classes and family not in (None, "q", "pmas")):
            if args.k is not None and parse_range(args.k, [3]) != [3]:
                raise MasseyError(f"Only triple products are searched on {family}. Please pass --k 3.")
            return self._massey_search(K, payload)
        if args.classes:
            groups = [parse_classes(K, fieldspec, args.classes)]
        elif family is None:
            raise MasseyError("Input complexes need explicit classes. Please pass --classes or --search.")
        else:
            groups = [self._family_classes(args, K, k, fieldspec) for k in parse_range(args.k, [args.n])]
        products = []
        for classes in groups:
            report = massey_product(K, classes, strategy, s.budget)
            entry = report.to_json()
            entry["l_em"] = eilenberg_moore_bound(report)
            products.append(entry)
        payload["products"] = products
        if args.transfer:
            r, target = parse_integers(args.transfer, "--transfer", count=2)
            payload["transfer"] = transfer_check(r, target, fieldspec=fieldspec).to_json()
        self.publish("massey", payload)
        if args.classes:
            return 0
        holds = all(p["nontrivial"] for p in products) and payload.get("transfer", {}).get("holds", True)
        return 0 if holds else 1

    def _building_set(self, args: Any) -> BuildingSet:
        if getattr(args, "input", None):
            return load_building_set(args.input)
        if args.family is None or args.n is None:
            raise InputError("No building set given. Please pass --input FILE or --family NAME --n N.")
        return family_building_set(args.family, args.n)

    def cmd_nesto(self, args: Any) -> int:
        action = args.action
        payload: Dict[str, Any] = {"action": action}
        if action == "fmas":
            sizes = parse_integers(args.sizes, "--sizes")
            payload.update(fmas_construction(sizes, args.l).to_json())
            return 0 if self.publish("nesto", payload) else 1
        B = self._building_set(args)
        if action == "show":
            K = nestohedron_nerve(B)
            payload.update({
                "building_set": B.to_json(),
                "facets": K.m,
                "dimension": K.dimension + 1,
                "flag": is_flag(K),
                "nerve": K.to_json(),
            })
            if args.family in ("q", "pmas") and args.n is not None and args.n >= 2:
                payload["expected_facets"] = expected_pmas_facets(args.n) if args.family == "pmas" else expected_q_facets(args.n)
        elif action == "validate":
            payload.update(validate(B).to_json())
        elif action == "boundary":
            payload["terms"] = [term.to_json(B) for term in boundary_terms(B)]
        elif action == "contraction":
            S = parse_integers(args.S, "--S")
            members = [parse_integers(part, "--members") for part in args.members.split(";")] if args.members else None
            payload.update(contraction_intersection_report(B, S, members))
        return 0 if self.publish("nesto", payload) else 1

    def cmd_ring(self, args: Any) -> int:
        s = self.settings
        action = args.action
        if action == "verify":
            report = verify_identity(args.id, args.n, args.family, self.registry)
            self.publish("ring", report.to_json())
            return 0 if report.holds else 1
        if action == "closure":
            report = d_closure(args.family, args.dim, s.closure_cap, self.registry)
            return 0 if self.publish("ring", report.to_json()) else 1
        if action == "gdfp":
            report = gdfp_check(args.family, args.n)
            self.publish("ring", report.to_json())
            return 0 if report.holds else 1
        if args.family is None or args.n is None:
            raise InputError(f"'ring {action}' needs a polytope. Please pass --family NAME --n N.")
        element = family_element(self.registry, args.family, args.n)
        if action == "boundary":
            payload = {
                "polytope": element.format(),
                "boundary": element.d().format(),
                "f_polynomial": polynomial_json(f_polynomial(element)),
                "h_polynomial": polynomial_json(h_polynomial(element)),
                "terms": element.d().to_json(),
            }
            return 0 if self.publish("ring", payload) else 1
        if action == "fc":
            K = family_complex(args.family, args.n)
            for _ in range(args.times):
                K = fc_complex(K, args.facet if args.facet is not None else K.ground[0])
            payload = {
                "source": element.format(),
                "times": args.times,
                "facets": K.m,
                "dimension": K.dimension + 1,
                "flag": is_flag(K),
                "class": self.registry.polytope(K, "derived").format(),
            }
            return 0 if self.publish("ring", payload) else 1
        raise InputError(f"Unknown ring action '{action}'")

    def cmd_series(self, args: Any) -> int:
        s = self.settings
        order = s.order
        if args.action == "verify":
            report = series_verify(args.id, order, self.registry, cap=s.closure_cap)
            self.publish("series", report.to_json())
            return 0 if report.holds else 1
        series = series_build(args.family, order, args.q, self.registry, cap=s.closure_cap)
        payload = series.to_json()
        for term in payload["terms"]:
            term["display"] = series.coefficient(term["q"], term["x"]).format()
        payload["family"] = args.family
        return 0 if self.publish("series", payload) else 1

    def run(self, args: Any) -> int:
        handlers = {
            "complex": self.cmd_complex,
            "betti": self.cmd_betti,
            "massey": self.cmd_massey,
            "nesto": self.cmd_nesto,
            "ring": self.cmd_ring,
            "series": self.cmd_series,
        }
        logger.info(f"🔍 Running '{args.command}' with {self.settings.to_dict()}")
        return handlers[args.command](args)
