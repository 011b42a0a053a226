// Build with: wasm-pack build crates/web --target web --out-dir www/pkg
import init, { build, analyze, collapse } from "./pkg/slimlat_web.js";

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";
let current = null;

function el(name, attrs) {
  const e = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  return e;
}

function positions(d) {
  const ranks = Math.max(...d.nodes.map((n) => n.rank));
  const pos = {};
  for (const n of d.nodes) {
    pos[n.id] = {
      x: 260 + (n.slot - (n.rank_size - 1) / 2) * 60,
      y: 390 - (ranks === 0 ? 0 : (n.rank * 360) / ranks),
    };
  }
  return pos;
}

function draw(d, highlight = new Set(), source = null) {
  const svg = $("diagram");
  svg.replaceChildren();
  const pos = positions(d);
  for (const [a, b] of d.edges) {
    const key = `${a},${b}`;
    const line = el("line", { x1: pos[a].x, y1: pos[a].y, x2: pos[b].x, y2: pos[b].y });
    if (highlight.has(key)) line.classList.add("hit");
    if (source === key) line.classList.add("source");
    line.addEventListener("click", () => onEdge(a, b));
    svg.append(line);
  }
  for (const n of d.nodes) {
    const c = el("circle", { cx: pos[n.id].x, cy: pos[n.id].y, r: 11 });
    if (n.labels.includes("middle")) c.classList.add("middle");
    const t = el("text", { x: pos[n.id].x, y: pos[n.id].y });
    t.textContent = n.id;
    svg.append(c, t);
  }
}

function onBuild() {
  const r = JSON.parse(build($("script").value));
  if (!r.ok) {
    $("info").textContent = r.error;
    return;
  }
  current = r.result;
  $("info").textContent =
    `${current.nodes.length} elements, ${current.edges.length} covers\n` +
    `c_l = ${current.c_l}, c_r = ${current.c_r}, t = ${current.t}\nid ${current.digest}`;
  $("out").textContent = "";
  draw(current);
}

function onAnalyze() {
  const r = JSON.parse(analyze($("script").value));
  if (!r.ok) {
    $("out").textContent = r.error;
    return;
  }
  const a = r.result;
  const lines = [`|Con L| = ${a.con_size}`, `dual atoms: ${a.dual_atoms.length}`];
  a.join_irreducibles.forEach((j, i) =>
    lines.push(`j${i} = con(${j.generator}) below [${j.covers.map((c) => "j" + c).join(" ")}]`));
  for (const c of a.checks) {
    lines.push(`${c.pass ? "PASS" : "FAIL"} ${c.name} ${c.detail} ${c.witness.join("; ")}`);
  }
  $("out").textContent = lines.join("\n");
}

function onEdge(lo, hi) {
  if (!current) return;
  const r = JSON.parse(collapse($("script").value, lo, hi));
  if (!r.ok) {
    $("out").textContent = r.error;
    return;
  }
  const c = r.result;
  const hit = new Set(c.collapsed.map((x) => x.interval.join(",")));
  draw(current, hit, `${lo},${hi}`);
  const fmt = (p) => `[${p[0]},${p[1]}]`;
  const lines = [`con([${lo},${hi}]) blocks: ${c.blocks.map((b) => "{" + b + "}").join(" ")}`];
  for (const x of c.collapsed) {
    lines.push(`${fmt(x.interval)}: ${fmt([lo, hi])} up to ${x.sequence.map(fmt).join(" then ")}`);
  }
  $("out").textContent = lines.join("\n");
}

await init();
$("build").addEventListener("click", onBuild);
$("analyze").addEventListener("click", onAnalyze);
onBuild();
