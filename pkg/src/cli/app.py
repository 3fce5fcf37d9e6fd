"""
命令行入口
子命令：decompose、certify、chern、conformal-check、spinor-check、obstruct、enumerate、report

退出码：0 全部通过；1 有检查未通过；2 用法、输入或 IO 错误（stderr 输出一行诊断）。
"""

import argparse
import configparser
import sys
from typing import Callable, Dict, List, Optional

import numpy as np

from src.config.config import Config
from src.config.global_config import CONFIG_FILE
from src.cli.log import get_logger
from src.enums.model_name import Models
from src.enums.report_def import Orientation, OutputFormat, Provenance
from src.errors import DocumentError, Einstein4Error
from src.geometry.curvature import CurvatureOperator, decompose
from src.geometry.inequalities import det_bound_check, eigen_lower_bound_report, lemma_k_check
from src.geometry.sectional import min_sectional, min_sectional_einstein
from src.models.catalog import get_model, reference_operator
from src.models.conformal import conformal_convergence_study, default_bump_point, default_steps, gaussian_bump
from src.quadrature.checks import conformal_weyl_invariance
from src.quadrature.gauss_legendre import QuadratureScheme, QuadratureSpec
from src.quadrature.invariants import invariant_report
from src.report.exporter import emit
from src.report.schemas import CheckRecord, PaperReport, RunConfig
from src.report.suites import SUITES, from_verdict, record, run_suites, spinor_suite
from src.tools.json_io import read_json, read_matrix, write_bytes
from src.topology.descriptor import TopologyDescriptor
from src.topology.gates import combined_verdict, hitchin_gate, simply_connected_deduction, theorem_a_gate, theorem_b_gate
from src.topology.homeotypes import enumerate_homeotypes

PROG = "einstein4-check"


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=None, help="输出格式")
    common.add_argument("--output", default=None, help="输出文件，缺省写到标准输出")
    common.add_argument("--seed", type=int, default=None, help="随机数种子")
    common.add_argument("--fd-step", type=float, default=None, help="有限差分步长")
    common.add_argument("--quad-order", type=int, default=None, help="每轴 Gauss-Legendre 节点数")
    common.add_argument("--tol", type=float, default=None, help="积分比较的相对容差")
    common.add_argument("--config", default=None, help="配置文件，缺省为仓库根目录的 config.ini")
    return common


def _model_options(parser: argparse.ArgumentParser, default: Optional[str] = None) -> None:
    parser.add_argument("--model", choices=Models.keys(), default=default, required=default is None)
    parser.add_argument(
        "--param", action="append", default=[], metavar="NAME=VALUE", help="模型参数，如 radius=2、a=1、b=0.5"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="四维 Einstein 流形计算内容的数值校验")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    p = sub.add_parser("decompose", parents=[common], help="分解 6×6 曲率算子")
    p.add_argument("--input", default="-", help="曲率算子 JSON，缺省读标准输入")

    p = sub.add_parser("certify", parents=[common], help="极小截面曲率与逐点不等式")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", help="曲率算子 JSON，'-' 表示标准输入")
    group.add_argument("--model", choices=Models.keys())
    p.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")

    p = sub.add_parser("chern", parents=[common], help="χ、τ、体积与 𝒮(g) 的求积")
    _model_options(p)
    p.add_argument("--reversed", action="store_true", help="反转定向")
    p.add_argument("--homogeneous", action="store_true", help="齐性捷径：参考点值 × 体积")

    p = sub.add_parser("conformal-check", parents=[common], help="共形变换律与 ∫|W⁺|² 的共形不变性")
    _model_options(p, default="s4")
    p.add_argument("--amplitude", type=float, default=0.3, help="Gauss 鼓包振幅")

    p = sub.add_parser("spinor-check", parents=[common], help="3/5 恒等式与 Kato 常数估计")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--kato-samples", type=int, default=100000)

    p = sub.add_parser("obstruct", parents=[common], help="拓扑障碍门限")
    p.add_argument("--chi", type=int)
    p.add_argument("--tau", type=int)
    p.add_argument("--bplus", type=int)
    p.add_argument("--bminus", type=int)
    p.add_argument("--bone", type=int, default=0)
    p.add_argument("--non-orientable", action="store_true")
    p.add_argument("--infinite-pi1", action="store_true")

    sub.add_parser("enumerate", parents=[common], help="单连通候选同胚型")

    p = sub.add_parser("report", parents=[common], help="运行全部校验套件")
    p.add_argument("--all", action="store_true", help="运行全部套件（缺省行为）")
    p.add_argument("--suite", action="append", choices=list(SUITES), default=[])
    return parser


def _params(items: List[str]) -> Dict[str, float]:
    params = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep:
            raise DocumentError(f"模型参数应写成 NAME=VALUE: {item}")
        try:
            params[name.strip()] = float(value)
        except ValueError:
            raise DocumentError(f"模型参数 {name} 的值不是数: {value}")
    return params


def _load_operator(path: str) -> CurvatureOperator:
    doc = read_json(path)
    matrix = read_matrix(doc)
    if isinstance(doc, dict):
        return CurvatureOperator.from_document({**doc, "matrix": matrix})
    return CurvatureOperator(matrix)


def _spec(run: RunConfig, homogeneous: bool = False) -> QuadratureSpec:
    scheme = QuadratureScheme.Homogeneous if homogeneous else QuadratureScheme.Product
    return QuadratureSpec.from_order(run.quad_order, scheme)


def _pointwise_records(suite: str, op: CurvatureOperator) -> List[CheckRecord]:
    d = decompose(op)
    records = []
    for label, block in (("w_plus", d.w_plus), ("w_minus", d.w_minus)):
        eig = eigen_lower_bound_report(block)
        records.append(
            record(
                suite, f"eigen_lower_bound.{label}", "|λ_min| ≥ ‖W‖/√6",
                eig.model_dump(), {"ok": True}, Provenance.DERIVED, eig.ok,
                margin=abs(eig.lambda_min) - eig.frobenius / 6**0.5,
            )
        )
        det = det_bound_check(block)
        records.append(
            record(
                suite, f"det_bound.{label}", "3√6·det W ≤ ‖W‖³",
                det.model_dump(), {"ok": True}, Provenance.DERIVED, det.ok, margin=det.rhs - det.lhs,
            )
        )
    records.append(
        record(
            suite, "einstein", "B = 0（r̊ = 0）", {"einstein": d.is_einstein()}, {}, Provenance.TRIVIAL, True,
        )
    )
    return records


def cmd_decompose(args, run: RunConfig) -> PaperReport:
    op = _load_operator(args.input)
    d = decompose(op)
    return PaperReport.build(run, _pointwise_records("decompose", op), payload=d.to_dict())


def cmd_certify(args, run: RunConfig) -> PaperReport:
    if args.model:
        op = CurvatureOperator(reference_operator(get_model(args.model, **_params(args.param))))
    else:
        op = _load_operator(args.input)
    suite = "certify"
    result = min_sectional(op)
    scale = max(float(np.abs(op.matrix).max()), 1.0)
    tol = Config.inequality_tol * scale
    records = [
        record(
            suite, "min_sectional", "min K 的符号",
            {"min_sectional": result.value, "nonnegative": result.value >= -tol}, {},
            Provenance.DERIVED, True, margin=result.value,
            detail="截面曲率非负" if result.value >= -tol else "存在负截面曲率",
        ),
        record(
            suite, "min_sectional_certified", "极小化收敛且投影梯度为零",
            {"gradient_norm": result.gradient_norm, "iterations": result.iterations}, {"certified": True},
            Provenance.DERIVED, result.certified,
        ),
    ]
    d = decompose(op)
    if d.is_einstein():
        closed = min_sectional_einstein(d)
        records.append(
            record(
                suite, "min_sectional_closed_form", "Einstein：min K = s/12 + (λ⁺ + λ⁻)/2",
                {"min_sectional": result.value}, {"closed_form": closed},
                Provenance.DERIVED, abs(result.value - closed) <= 1e-9 * scale,
                margin=1e-9 * scale - abs(result.value - closed),
            )
        )
        lemma = lemma_k_check(d)
        records.append(
            record(
                suite, "weyl_bound", "非负截面曲率 Einstein：s/√6 ≥ |W⁺| + |W⁻|",
                {"lhs": lemma.lhs, "rhs": lemma.rhs}, {"relation": ">="},
                Provenance.DERIVED, lemma.ok, margin=lemma.margin, applicable=lemma.applicable,
            )
        )
    records.extend(_pointwise_records(suite, op))
    payload = {
        "operator": op.to_document(),
        "min_sectional": result.value,
        "argmin": result.argmin.components.tolist(),
        "certified": result.certified,
    }
    return PaperReport.build(run, records, payload=payload)


def cmd_chern(args, run: RunConfig) -> PaperReport:
    model = get_model(args.model, **_params(args.param))
    orientation = Orientation.Reversed if args.reversed else Orientation.Standard
    report = invariant_report(model, _spec(run, args.homogeneous), orientation)
    records = [
        from_verdict("chern", f"{v.name}.{model.key}", v.name, v, Provenance.DERIVED) for v in report.verdicts
    ]
    return PaperReport.build(run, records, payload=report.model_dump(mode="json"))


def cmd_conformal(args, run: RunConfig) -> PaperReport:
    model = get_model(args.model, **_params(args.param))
    chart = model.chart
    u = gaussian_bump(chart.reference_point, amplitude=args.amplitude)
    study = conformal_convergence_study(chart, u, default_bump_point(chart), default_steps())
    order = study.observed_orders[-1]
    weyl = conformal_weyl_invariance(model, spec=_spec(run))
    records = [
        record(
            "conformal", "law_convergence", "𝔖_{u²g} = u⁻³(6Δu + 𝔖u) 的残差按 O(h²) 收敛",
            {"observed_order": order, "extrapolated": study.extrapolated}, {"order": 2.0, "max_extrapolated": 1e-5},
            Provenance.DERIVED, abs(order - 2.0) <= 0.3 and abs(study.extrapolated) <= 1e-5,
            margin=0.3 - abs(order - 2.0),
        ),
        from_verdict("conformal", "weyl_invariance", "∫|W⁺|² dμ 共形不变", weyl.verdicts[0], Provenance.DERIVED),
    ]
    payload = {"convergence": study.model_dump(), "weyl": weyl.model_dump(mode="json")}
    return PaperReport.build(run, records, payload=payload)


def cmd_spinor(args, run: RunConfig) -> PaperReport:
    records = spinor_suite(seed=run.seed, samples=args.samples, kato_samples=args.kato_samples)
    return PaperReport.build(run, records)


def cmd_obstruct(args, run: RunConfig) -> PaperReport:
    by_betti = args.bplus is not None or args.bminus is not None
    by_invariants = args.chi is not None or args.tau is not None
    if by_betti == by_invariants:
        raise DocumentError("需要 --chi/--tau 或 --bplus/--bminus 二者之一")
    suite = "obstruct"
    if by_invariants:
        if args.chi is None or args.tau is None:
            raise DocumentError("--chi 与 --tau 需要同时给出")
        gates = [theorem_b_gate(args.chi, args.tau), hitchin_gate(args.chi, args.tau)]
        deduction = simply_connected_deduction(args.tau)
        payload = {"gates": [g.model_dump() for g in gates], "deduction": deduction.model_dump()}
        # 门限已检查奇偶性，(χ, τ) 与 b₁ = 0 一起确定 b±
        b_plus, b_minus = (args.chi - 2 + args.tau) // 2, (args.chi - 2 - args.tau) // 2
        if b_plus >= 0 and b_minus >= 0:
            payload["definite_form"] = theorem_a_gate(TopologyDescriptor(b_plus, b_minus)).model_dump()
    else:
        if args.bplus is None or args.bminus is None:
            raise DocumentError("--bplus 与 --bminus 需要同时给出")
        desc = TopologyDescriptor(
            b_plus=args.bplus,
            b_minus=args.bminus,
            b_one=args.bone,
            orientable=not args.non_orientable,
            finite_pi1=not args.infinite_pi1 and args.bone == 0,
        )
        verdict = combined_verdict(desc)
        gates = verdict.gates
        payload = {"verdict": verdict.model_dump(), "definite_form": theorem_a_gate(desc).model_dump()}
    records = [
        record(
            suite, g.gate, g.provenance, {"open": g.ok}, {}, Provenance.DERIVED, True,
            margin=min(m.value for m in g.margins), detail="门限开放" if g.ok else "门限关闭",
        )
        for g in gates
    ]
    return PaperReport.build(run, records, payload=payload)


def cmd_enumerate(args, run: RunConfig) -> PaperReport:
    classes = enumerate_homeotypes()
    records = [
        record(
            "enumerate", "homeotype_count", "至多十二个同胚型",
            {"count": len(classes)}, {"count": 12}, Provenance.PAPER, len(classes) == 12,
        )
    ]
    return PaperReport.build(run, records, payload=[c.model_dump() for c in classes])


def cmd_report(args, run: RunConfig) -> PaperReport:
    names = list(SUITES) if args.all or not args.suite else args.suite
    return PaperReport.build(run, run_suites(names))


HANDLERS: Dict[str, Callable] = {
    "decompose": cmd_decompose,
    "certify": cmd_certify,
    "chern": cmd_chern,
    "conformal-check": cmd_conformal,
    "spinor-check": cmd_spinor,
    "obstruct": cmd_obstruct,
    "enumerate": cmd_enumerate,
    "report": cmd_report,
}


def _run_config(args) -> RunConfig:
    overrides = {
        "quad_order": args.quad_order,
        "fd_step": args.fd_step,
        "tol": args.tol,
        "seed": args.seed,
        "output_format": args.format,
        "output": args.output,
        "model": getattr(args, "model", None),
    }
    return RunConfig(subcommand=args.command, **{k: v for k, v in overrides.items() if v is not None})


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 用法错误为 2，--help 为 0
        return int(e.code or 0)

    log = get_logger()
    try:
        Config.load_config(args.config or CONFIG_FILE)
        run_config = _run_config(args)
        run_config.apply()
        log.info(f"{args.command}: {run_config.echo()}")
        report = HANDLERS[args.command](args, run_config)
        write_bytes(emit(report, run_config.output_format), run_config.output)
    except (Einstein4Error, OSError, configparser.Error, ValueError) as e:
        message = " ".join(str(e).split())
        log.info(f"{args.command} 失败: {message}")
        sys.stderr.write(f"{PROG}: error: {message}\n")
        return 2
    log.info(f"{args.command}: {report.summary.model_dump()}")
    return report.exit_code


def main() -> None:
    sys.exit(run())
