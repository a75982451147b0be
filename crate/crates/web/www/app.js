import init, { graphReport, checkReport, compareReport } from "./pkg/cgraph_web.js";

const PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                 "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"];
const SVG = "http://www.w3.org/2000/svg";
const $ = (id) => document.getElementById(id);

function fail(target, err) {
  target.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(err);
  target.appendChild(p);
}

// Force-directed layout: springs on edges, repulsion between all pairs.
function layout(n, edges, width, height) {
  const pos = Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / Math.max(n, 1);
    return { x: width / 2 + (width / 3) * Math.cos(a), y: height / 2 + (height / 3) * Math.sin(a) };
  });
  const k = Math.sqrt((width * height) / Math.max(n, 1)) * 0.6;
  for (let step = 0; step < 300; step++) {
    const disp = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
        const d = Math.max(Math.hypot(dx, dy), 0.01);
        const f = (k * k) / d;
        disp[i].x += (dx / d) * f; disp[i].y += (dy / d) * f;
        disp[j].x -= (dx / d) * f; disp[j].y -= (dy / d) * f;
      }
    }
    for (const [a, b] of edges) {
      const dx = pos[a].x - pos[b].x, dy = pos[a].y - pos[b].y;
      const d = Math.max(Math.hypot(dx, dy), 0.01);
      const f = (d * d) / k;
      disp[a].x -= (dx / d) * f; disp[a].y -= (dy / d) * f;
      disp[b].x += (dx / d) * f; disp[b].y += (dy / d) * f;
    }
    const t = 40 * (1 - step / 300) + 1;
    for (let i = 0; i < n; i++) {
      const d = Math.max(Math.hypot(disp[i].x, disp[i].y), 0.01);
      pos[i].x = Math.min(width - 20, Math.max(20, pos[i].x + (disp[i].x / d) * Math.min(d, t)));
      pos[i].y = Math.min(height - 20, Math.max(20, pos[i].y + (disp[i].y / d) * Math.min(d, t)));
    }
  }
  return pos;
}

function draw() {
  const svg = $("canvas");
  svg.innerHTML = "";
  let g;
  try {
    g = JSON.parse(graphReport($("spec").value.trim(), $("kind").value));
  } catch (e) {
    fail($("drawInfo"), e);
    return;
  }
  const sizes = new Map(g.components.map((c) => [c.id, c.size]));
  const shown = g.vertices.filter((v) => !$("hideIsolated").checked || sizes.get(v.component) > 1);
  const index = new Map(shown.map((v, i) => [v.id, i]));
  const edges = g.edges.filter(([a, b]) => index.has(a) && index.has(b)).map(([a, b]) => [index.get(a), index.get(b)]);
  const pos = layout(shown.length, edges, 1000, 560);
  for (const [a, b] of edges) {
    const l = document.createElementNS(SVG, "line");
    l.setAttribute("x1", pos[a].x); l.setAttribute("y1", pos[a].y);
    l.setAttribute("x2", pos[b].x); l.setAttribute("y2", pos[b].y);
    svg.appendChild(l);
  }
  shown.forEach((v, i) => {
    const c = document.createElementNS(SVG, "circle");
    c.setAttribute("cx", pos[i].x); c.setAttribute("cy", pos[i].y);
    c.setAttribute("r", v.role === "independent" ? 7 : 5);
    c.setAttribute("fill", PALETTE[v.component % PALETTE.length]);
    const title = document.createElementNS(SVG, "title");
    title.textContent = `${v.label} (${v.role}, component ${v.component}, twin class ${v.twin})`;
    c.appendChild(title);
    svg.appendChild(c);
    if (shown.length <= 60) {
      const t = document.createElementNS(SVG, "text");
      t.setAttribute("x", pos[i].x + 8); t.setAttribute("y", pos[i].y + 3);
      t.textContent = v.label;
      svg.appendChild(t);
    }
  });
  const nontrivial = g.components.filter((c) => c.size > 1);
  const isolated = g.components.length - nontrivial.length;
  const parts = nontrivial.map((c) => `${c.size} vertices, diameter ${c.diameter}${c.complete ? " (complete)" : ""}`);
  $("drawInfo").textContent =
    `${g.group}: order ${g.order}, |G:Z| = ${g.index}; ${g.kind} graph with ${g.vertices.length} vertices, ` +
    `${g.edges.length} edges, ${isolated} isolated. ` + (parts.length ? `Components: ${parts.join("; ")}.` : "");
}

function runChecks() {
  const out = $("checkOut");
  let r;
  try {
    r = JSON.parse(checkReport($("spec").value.trim(), $("checks").value.trim()));
  } catch (e) {
    fail(out, e);
    return;
  }
  out.innerHTML = "";
  const s = r.summary;
  const p = document.createElement("p");
  p.textContent = `pass ${s.pass}, fail ${s.fail}, not applicable ${s.vacuous}, exploratory ${s.exploratory}`;
  out.appendChild(p);
  const table = document.createElement("table");
  table.innerHTML = "<tr><th>check</th><th>hypothesis</th><th>conclusion</th><th>witness</th></tr>";
  for (const res of r.results) {
    const tr = document.createElement("tr");
    const verdict = res.conclusion === true ? "holds" : res.conclusion === false ? "fails" : "not applicable";
    const cls = res.conclusion === true ? "pass" : res.conclusion === false ? "fail" : "na";
    for (const [text, c] of [[res.checkId, ""], [String(res.hypothesis), ""], [verdict, cls]]) {
      const td = document.createElement("td");
      td.textContent = text;
      if (c) td.className = c;
      tr.appendChild(td);
    }
    const td = document.createElement("td");
    const pre = document.createElement("pre");
    pre.textContent = JSON.stringify(res.witness).slice(0, 300);
    td.appendChild(pre);
    tr.appendChild(td);
    table.appendChild(tr);
  }
  out.appendChild(table);
}

function compare() {
  const out = $("compareOut");
  let r;
  try {
    r = JSON.parse(compareReport($("left").value.trim(), $("right").value.trim()));
  } catch (e) {
    fail(out, e);
    return;
  }
  out.innerHTML = "";
  const table = document.createElement("table");
  table.innerHTML = `<tr><th>graph</th><th>${r.left}</th><th>${r.right}</th><th>isomorphic</th></tr>`;
  for (const kind of ["commuting", "star", "centralizer"]) {
    const e = r[kind];
    const tr = document.createElement("tr");
    const cells = e.error
      ? [kind, e.error, "", ""]
      : [kind, `${e.vertices[0]} v, ${e.edges[0]} e`, `${e.vertices[1]} v, ${e.edges[1]} e`, e.isomorphic ? "yes" : "no"];
    for (const c of cells) {
      const td = document.createElement("td");
      td.textContent = c;
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  out.appendChild(table);
}

await init();
$("draw").addEventListener("click", draw);
$("run").addEventListener("click", runChecks);
$("compare").addEventListener("click", compare);
draw();
