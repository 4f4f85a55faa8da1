/** Command line: `render` one heatmap, `batch-tls` the six-panel figure set. */

import { parseArgs } from "node:util";

import { ValidationError } from "./csv.js";
import { renderHeatmap, renderSixPanelBatch, type HeatmapSpec } from "./heatmap.js";

function usage(): string {
  return [
    "usage:",
    "  cli.js render --input sweep.csv --column gap_radial --x-axis reE --y-axis imE \\",
    "                --output out.png [--scale linear|log] [--range lo,hi] \\",
    "                [--pixel-scale N] [--mark-min] [--title text]",
    "  cli.js batch-tls --input sweep.csv --outdir dir [--pixel-scale N]",
  ].join("\n");
}

function parseRange(raw: string): [number, number] {
  const parts = raw.split(",").map(Number);
  if (parts.length !== 2 || parts.some(Number.isNaN) || parts[0] >= parts[1]) {
    throw new ValidationError(`bad --range '${raw}' (expected lo,hi with lo < hi)`);
  }
  return [parts[0], parts[1]];
}

function requireOption(value: string | undefined, name: string): string {
  if (!value) throw new ValidationError(`missing required option --${name}`);
  return value;
}

function runRender(argv: string[]): void {
  const { values } = parseArgs({
    args: argv,
    options: {
      input: { type: "string" },
      column: { type: "string" },
      "x-axis": { type: "string" },
      "y-axis": { type: "string" },
      output: { type: "string" },
      scale: { type: "string" },
      range: { type: "string" },
      "pixel-scale": { type: "string" },
      "mark-min": { type: "boolean" },
      title: { type: "string" },
    },
  });
  const scale = values.scale ?? "linear";
  if (scale !== "linear" && scale !== "log") {
    throw new ValidationError(`--scale must be 'linear' or 'log', got '${scale}'`);
  }
  const spec: HeatmapSpec = {
    input: requireOption(values.input, "input"),
    column: requireOption(values.column, "column"),
    xColumn: requireOption(values["x-axis"], "x-axis"),
    yColumn: requireOption(values["y-axis"], "y-axis"),
    output: requireOption(values.output, "output"),
    scale,
    range: values.range ? parseRange(values.range) : undefined,
    pixelScale: values["pixel-scale"] ? Number(values["pixel-scale"]) : 1,
    markMin: values["mark-min"] ?? false,
    title: values.title,
  };
  console.log(renderHeatmap(spec));
}

function runBatch(argv: string[]): void {
  const { values } = parseArgs({
    args: argv,
    options: {
      input: { type: "string" },
      outdir: { type: "string" },
      "pixel-scale": { type: "string" },
    },
  });
  const panels = renderSixPanelBatch(
    requireOption(values.input, "input"),
    requireOption(values.outdir, "outdir"),
    { pixelScale: values["pixel-scale"] ? Number(values["pixel-scale"]) : 1 },
  );
  for (const panel of panels) {
    console.log(`${panel.column}: ${panel.file}`);
  }
}

export function main(argv: string[]): number {
  const [command, ...rest] = argv;
  try {
    if (command === "render") {
      runRender(rest);
    } else if (command === "batch-tls") {
      runBatch(rest);
    } else {
      console.error(usage());
      return 1;
    }
    return 0;
  } catch (err) {
    if (err instanceof ValidationError || err instanceof Error) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

process.exit(main(process.argv.slice(2)));
