# Copyright 2026 The hsbnn Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software distributed
# under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
# CONDITIONS OF ANY KIND, either express or implied. See the License for the specific
# language governing permissions and limitations under the License.

"""
Command-line entry point: ``hsbnn train|eval|inspect|experiment|gen-data``.

Exit codes: 0 on success, 1 for usage and config errors, 2 for data,
format and checkpoint errors, 3 when training hits a non-finite ELBO.
"""

import argparse
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

import boto3

from .client import (
    CHECKPOINT,
    DEFAULT_PREDICTIVE_SAMPLES,
    HsbnnClient,
    RunConfig,
    load_config,
    load_dataset,
)
from .contrib import (
    AbstractCheckpointStore,
    FileCheckpointStore,
    S3CheckpointStore,
    parse_s3_url,
)
from .data import gen_cubic, gen_cubic_grid, gen_planted_network, write_csv
from .diagnostics import DEFAULT_THRESHOLD
from .exceptions import (
    CheckpointDoesNotExistError,
    ConfigError,
    ContractError,
    DimensionError,
    DomainError,
    FormatError,
    NumericalError,
)
from .experiments import ExperimentFactory, ExperimentOptions
from .model import LayerFactory, LikelihoodFactory

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3

RESULTS_JSON = "results.json"
RESULTS_CSV = "results.csv"

GENERATORS = {
    "cubic": (gen_cubic, 20),
    "cubic-grid": (gen_cubic_grid, 100),
    "planted": (gen_planted_network, 500),
}


class UsageError(Exception):
    pass


USAGE_ERRORS = (
    UsageError,
    ConfigError,
    ContractError,
    LayerFactory.InvalidLayerTypeError,
    LikelihoodFactory.InvalidLikelihoodTypeError,
)

DATA_ERRORS = (
    FormatError,
    DomainError,
    DimensionError,
    CheckpointDoesNotExistError,
    OSError,
)


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def open_store(out: str) -> AbstractCheckpointStore:
    if out.startswith("s3://"):
        bucket, prefix = parse_s3_url(out)
        return S3CheckpointStore(boto3.client("s3"), bucket, prefix)
    return FileCheckpointStore(out)


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers: %s" % text)


def _str_list(text: str) -> List[str]:
    return [part for part in text.split(",") if part]


def _read_config(path: Optional[str]) -> RunConfig:
    if path is None:
        return RunConfig()
    if not os.path.isfile(path):
        raise UsageError("config file not found: %s" % path)
    return load_config(path)


def cmd_train(args: argparse.Namespace) -> int:
    config = _read_config(args.config).with_seed(args.seed)
    dataset = load_dataset(config, args.data, "train")
    client = HsbnnClient(open_store(args.out))
    client.train(config, dataset, name=args.checkpoint)
    return EXIT_OK


def _eval_config(args: argparse.Namespace, client: HsbnnClient) -> RunConfig:
    if args.config is not None:
        return _read_config(args.config)
    network = client.load(args.checkpoint).meta.network
    mnist = bool(args.data) and os.path.isdir(args.data[0])
    return RunConfig(
        hidden_widths=network.hidden_widths,
        nonlinearity=network.nonlinearity,
        likelihood=network.likelihood,
        dataset="mnist" if mnist else "csv",
    )


def cmd_eval(args: argparse.Namespace) -> int:
    client = HsbnnClient(open_store(args.out))
    config = _eval_config(args, client).with_seed(args.seed)
    dataset = load_dataset(config, args.data, "test")
    metrics = client.evaluate(
        dataset, args.samples, config.train.seed, name=args.checkpoint
    )
    for key in sorted(metrics):
        print("%s\t%s" % (key, metrics[key]))
    return EXIT_OK


def cmd_inspect(args: argparse.Namespace) -> int:
    client = HsbnnClient(open_store(args.out))
    report = client.inspect(args.layer, args.threshold, name=args.checkpoint)
    print(
        "layer %d: %d of %d units active" % (report.layer, report.active, report.width)
    )
    return EXIT_OK


def _experiment_options(args: argparse.Namespace) -> ExperimentOptions:
    fields = {
        "seed": args.seed if args.seed is not None else 0,
        "workers": args.workers,
        "replicates": args.replicates,
        "samples": args.samples,
        "epochs": args.epochs,
        "steps": args.steps,
        "widths": args.widths,
        "modes": args.modes,
        "forward_variant": args.forward_variant,
        "data": args.data[0] if args.data else None,
        "protocol": args.protocol,
        "subset": args.subset,
    }  # type: Dict[str, Any]
    return ExperimentOptions(**fields)


def cmd_experiment(args: argparse.Namespace) -> int:
    experiment = ExperimentFactory.create(args.name)
    bundle = experiment.run(_experiment_options(args))
    store = open_store(args.out)
    store.put_text(RESULTS_JSON, bundle.to_json())
    store.put_text(RESULTS_CSV, bundle.records_csv())
    logger.info("%s: %d records", bundle.experiment, len(bundle.records))
    return EXIT_OK


def cmd_gen_data(args: argparse.Namespace) -> int:
    generate, default_n = GENERATORS[args.kind]
    seed = args.seed if args.seed is not None else 0
    dataset = generate(args.n or default_n, seed)
    columns = [dataset.features[:, j] for j in range(dataset.input_dim)]
    header = ["x%d" % j for j in range(dataset.input_dim)]
    if dataset.input_dim == 1:
        header = ["x"]
    header.append("y" if args.kind != "planted" else "label")
    write_csv(args.out, header, columns + [dataset.targets])
    logger.info("wrote %d rows to %s", dataset.size, args.out)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="override the seed")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG")


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog="hsbnn", description="Horseshoe-prior Bayesian neural networks."
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    train = commands.add_parser("train", help="train a model from a config file")
    train.add_argument("--config", help="JSON run config")
    train.add_argument("--data", action="append", default=[], help="data path")
    train.add_argument("--out", required=True, help="output directory or s3:// url")
    train.add_argument("--checkpoint", default=CHECKPOINT)
    _add_common(train)
    train.set_defaults(handler=cmd_train)

    evaluate = commands.add_parser("eval", help="score a checkpoint on test data")
    evaluate.add_argument("--config", help="JSON run config naming the dataset")
    evaluate.add_argument("--data", action="append", default=[], help="data path")
    evaluate.add_argument(
        "--out", required=True, help="checkpoint directory or s3:// url"
    )
    evaluate.add_argument("--checkpoint", default=CHECKPOINT)
    evaluate.add_argument("--samples", type=int, default=DEFAULT_PREDICTIVE_SAMPLES)
    _add_common(evaluate)
    evaluate.set_defaults(handler=cmd_eval)

    inspect = commands.add_parser("inspect", help="write a sparsity report for a layer")
    inspect.add_argument(
        "--out", required=True, help="checkpoint directory or s3:// url"
    )
    inspect.add_argument("--checkpoint", default=CHECKPOINT)
    inspect.add_argument("--layer", type=int, default=0)
    inspect.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    _add_common(inspect)
    inspect.set_defaults(handler=cmd_inspect)

    experiment = commands.add_parser("experiment", help="run a benchmark recipe")
    experiment.add_argument("name", choices=sorted(ExperimentFactory.EXPERIMENT_MAP))
    experiment.add_argument(
        "--out", required=True, help="results directory or s3:// url"
    )
    experiment.add_argument("--data", action="append", default=[], help="data path")
    experiment.add_argument("--samples", type=int, default=None)
    experiment.add_argument("--workers", type=int, default=1)
    experiment.add_argument("--replicates", type=int, default=None)
    experiment.add_argument("--epochs", type=int, default=None)
    experiment.add_argument("--steps", type=int, default=None)
    experiment.add_argument("--widths", type=_int_list, default=None)
    experiment.add_argument("--modes", type=_str_list, default=None)
    experiment.add_argument("--forward-variant", default=None)
    experiment.add_argument("--protocol", default=None)
    experiment.add_argument("--subset", type=int, default=None)
    _add_common(experiment)
    experiment.set_defaults(handler=cmd_experiment)

    gen_data = commands.add_parser("gen-data", help="write a synthetic dataset as CSV")
    gen_data.add_argument("kind", choices=sorted(GENERATORS))
    gen_data.add_argument("--out", required=True, help="CSV file to write")
    gen_data.add_argument("--n", type=int, default=None)
    _add_common(gen_data)
    gen_data.set_defaults(handler=cmd_gen_data)
    return parser


def configure_logging(verbose: bool) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
    )
    root = logging.getLogger("hsbnn")
    root.handlers = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.INFO)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except USAGE_ERRORS as e:
        print("hsbnn: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as e:
        print("hsbnn: numerical failure: %s" % e, file=sys.stderr)
        return EXIT_NUMERICAL
    except DATA_ERRORS as e:
        print("hsbnn: %s" % e, file=sys.stderr)
        return EXIT_DATA
