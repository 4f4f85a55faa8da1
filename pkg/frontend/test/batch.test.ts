// Acceptance-level checks for the six-panel figure batch: rendering from a
// sweep CSV produced by the gap CLI, marker vs CSV argmin, byte-identical
// re-renders, and the built CLI end to end.

import { spawnSync } from "node:child_process";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { afterAll, describe, expect, it } from "vitest";

import { argminGrid, extractGrid, parseCsv } from "../src/csv.js";
import { MARKER_COLOR, renderSixPanelBatch } from "../src/heatmap.js";
import { decodePng } from "../src/png.js";

const FIXTURE = path.join(__dirname, "fixtures", "tls_sweep.csv");
const CLI = path.join(__dirname, "..", "dist", "cli.js");
const tmp = fs.mkdtempSync(path.join(os.tmpdir(), "gapmap-batch-"));

afterAll(() => fs.rmSync(tmp, { recursive: true, force: true }));

const EXPECTED_FILES = [
  "linear.png",
  "radial.png",
  "quadratic.png",
  "diff_linear_radial.png",
  "diff_linear_quadratic.png",
  "diff_radial_quadratic.png",
];

describe("six-panel batch", () => {
  it("renders all six panels from the sweep CSV", () => {
    const outdir = path.join(tmp, "panels");
    const panels = renderSixPanelBatch(FIXTURE, outdir);
    expect(panels).toHaveLength(6);
    for (const name of EXPECTED_FILES) {
      expect(fs.existsSync(path.join(outdir, name))).toBe(true);
    }
  });

  it("marks the radial panel minimum at the CSV argmin cell", () => {
    const outdir = path.join(tmp, "marker");
    renderSixPanelBatch(FIXTURE, outdir);
    const table = parseCsv(fs.readFileSync(FIXTURE, "utf8"));
    const grid = extractGrid(table, "reE", "imE", "gap_radial");
    const mark = argminGrid(grid);
    const image = decodePng(fs.readFileSync(path.join(outdir, "radial.png")));
    const found: Array<[number, number]> = [];
    for (let y = 0; y < image.height; y++) {
      for (let x = 0; x < image.width; x++) {
        const o = (y * image.width + x) * 3;
        if (
          image.pixels[o] === MARKER_COLOR[0] &&
          image.pixels[o + 1] === MARKER_COLOR[1] &&
          image.pixels[o + 2] === MARKER_COLOR[2]
        ) {
          found.push([x, y]);
        }
      }
    }
    expect(found).toEqual([[mark.ix, grid.yValues.length - 1 - mark.iy]]);
    // the fixture sweep dips at probe energy E = i, i.e. (reE, imE) = (0, 1)
    expect(grid.xValues[mark.ix]).toBe(0);
    expect(grid.yValues[mark.iy]).toBe(1);
  });

  it("re-renders byte-identically", () => {
    const out1 = path.join(tmp, "first");
    const out2 = path.join(tmp, "second");
    renderSixPanelBatch(FIXTURE, out1);
    renderSixPanelBatch(FIXTURE, out2);
    for (const name of EXPECTED_FILES) {
      const a = fs.readFileSync(path.join(out1, name));
      const b = fs.readFileSync(path.join(out2, name));
      expect(a.equals(b), name).toBe(true);
    }
  });
});

describe("command line", () => {
  it("renders one heatmap end to end", () => {
    const output = path.join(tmp, "cli.png");
    const run = spawnSync("node", [
      CLI,
      "render",
      "--input", FIXTURE,
      "--column", "gap_radial",
      "--x-axis", "reE",
      "--y-axis", "imE",
      "--output", output,
      "--mark-min",
      "--pixel-scale", "2",
    ]);
    expect(run.status).toBe(0);
    const image = decodePng(fs.readFileSync(output));
    expect(image.width).toBe(62); // 31 grid columns at scale 2
    expect(image.height).toBe(42);
  });

  it("runs the batch subcommand", () => {
    const outdir = path.join(tmp, "cli-batch");
    const run = spawnSync("node", [CLI, "batch-tls", "--input", FIXTURE, "--outdir", outdir]);
    expect(run.status).toBe(0);
    expect(fs.readdirSync(outdir).sort()).toEqual([...EXPECTED_FILES].sort());
  });

  it("fails with a nonzero exit on validation errors", () => {
    const run = spawnSync("node", [
      CLI,
      "render",
      "--input", FIXTURE,
      "--column", "gap_missing",
      "--x-axis", "reE",
      "--y-axis", "imE",
      "--output", path.join(tmp, "nope.png"),
    ]);
    expect(run.status).toBe(1);
    expect(String(run.stderr)).toMatch(/no column named/);
  });

  it("rejects unknown subcommands", () => {
    const run = spawnSync("node", [CLI, "explode"]);
    expect(run.status).toBe(1);
  });
});
