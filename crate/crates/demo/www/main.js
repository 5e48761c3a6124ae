import init, { heights, gap_series, sift_membership } from "./pkg/greedyconv_demo.js";

const $ = (id) => document.getElementById(id);
const palette = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"];

function report(id, text, isError = false) {
  const el = $(id);
  el.textContent = text;
  el.className = isError ? "status error" : "status";
}

function clear(canvas) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  return ctx;
}

function plotHeights() {
  const d = Number($("h-d").value);
  const n = Number($("h-n").value);
  const canvas = $("h-canvas");
  const ctx = clear(canvas);
  let h;
  try {
    h = heights(d, n);
  } catch (e) {
    return report("h-status", String(e), true);
  }
  const pad = 20;
  const w = canvas.width - 2 * pad;
  const ht = canvas.height - 2 * pad;
  for (let i = 0; i < h.length; i++) {
    const x = pad + (i / Math.max(1, h.length - 1)) * w;
    const y = canvas.height - pad - ((h[i] - 1) / Math.max(1, d - 1)) * ht;
    ctx.fillStyle = palette[(h[i] - 1) % palette.length];
    ctx.fillRect(x, y - 1, 2, 2);
  }
  const primitive = h.reduce((acc, v) => acc + (v === 1 ? 1 : 0), 0);
  report("h-status", `${primitive} primitives up to ${n} (${(primitive / n).toFixed(4)})`);
}

function plotGaps() {
  const d = Number($("g-d").value);
  const n = Number($("g-n").value);
  const rankText = $("g-rank").value.trim();
  const rank = rankText === "" ? undefined : Number(rankText);
  const canvas = $("g-canvas");
  const ctx = clear(canvas);
  let flat;
  try {
    flat = gap_series(d, n, rank);
  } catch (e) {
    return report("g-status", String(e), true);
  }
  const count = flat.length / 3;
  if (count === 0) {
    return report("g-status", "fewer than two primitives in range");
  }
  let maxGap = 1;
  for (let i = 0; i < count; i++) maxGap = Math.max(maxGap, flat[3 * i + 1]);
  const pad = 20;
  const sx = (leader) => pad + (leader / n) * (canvas.width - 2 * pad);
  const sy = (g) => canvas.height - pad - (g / maxGap) * (canvas.height - 2 * pad);
  ctx.fillStyle = "#7570b3";
  for (let i = 0; i < count; i++) {
    ctx.fillRect(sx(flat[3 * i]), sy(flat[3 * i + 1]) - 1, 2, 2);
  }
  ctx.strokeStyle = "#d95f02";
  ctx.beginPath();
  for (let i = 0; i < count; i++) {
    const x = sx(flat[3 * i]);
    const y = sy(flat[3 * i + 2]);
    if (i === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  }
  ctx.stroke();
  const mean = flat[3 * (count - 1) + 2];
  report("g-status", `${count} gaps, largest ${maxGap}, mean ${mean.toFixed(4)}`);
}

function plotSift() {
  const set = $("s-set").value;
  const n = Number($("s-n").value);
  const canvas = $("s-canvas");
  const ctx = clear(canvas);
  let member;
  try {
    member = sift_membership(set, n);
  } catch (e) {
    return report("s-status", String(e), true);
  }
  const cols = Math.ceil(Math.sqrt(n * (canvas.width / canvas.height)));
  const cell = Math.min(canvas.width / cols, canvas.height / Math.ceil(n / cols));
  let kept = 0;
  for (let i = 0; i < n; i++) {
    kept += member[i];
    ctx.fillStyle = member[i] ? "#1b9e77" : "#eeeeee";
    ctx.fillRect((i % cols) * cell, Math.floor(i / cols) * cell, Math.max(1, cell - 1), Math.max(1, cell - 1));
  }
  report("s-status", `${kept} of ${n} survive (${(kept / n).toFixed(4)}); row length ${cols}`);
}

await init();
$("h-go").addEventListener("click", plotHeights);
$("g-go").addEventListener("click", plotGaps);
$("s-go").addEventListener("click", plotSift);
plotHeights();
plotGaps();
plotSift();
