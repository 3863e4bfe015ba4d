import init, { hasse_svg, totally_below_matrix, enumerate } from "./pkg/quantlat_web.js";

const $ = (id) => document.getElementById(id);

function inputs() {
  return [$("shape").value, $("gamma").value];
}

function guarded(fn) {
  return () => {
    $("error").textContent = "";
    try {
      fn();
    } catch (e) {
      $("error").textContent = String(e);
    }
  };
}

function escape(s) {
  return s.replace(/[&<>]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;" })[c]);
}

function drawDiagram() {
  $("diagram").innerHTML = hasse_svg(...inputs());
}

function showTotallyBelow() {
  const r = JSON.parse(totally_below_matrix(...inputs()));
  let html = "<table class=\"tb\"><tr><th>b ◁ a</th>";
  html += r.names.map((n) => `<th>${escape(n)}</th>`).join("") + "</tr>";
  r.matrix.forEach((row, b) => {
    html += `<tr><th>${escape(r.names[b])}</th>`;
    html += row.map((t) => `<td class="${t ? "yes" : ""}">${t ? "◁" : ""}</td>`).join("") + "</tr>";
  });
  html += "</table>";
  html += `<p>completely distributive: ${r.completelyDistributive}</p>`;
  $("output").innerHTML = html;
}

function showEnumeration() {
  const r = JSON.parse(enumerate(...inputs(), $("constraint").value));
  let html = `<p>${r.total} quantales with ${escape(r.constraint)}: ${r.unital} unital, ${r.commutative} commutative</p>`;
  r.entries.forEach((e, i) => {
    const label = e.label ? ` [${escape(e.label)}]` : "";
    const flags = Object.entries(e.flags).map(([k, v]) => `${k}=${v}`).join(" ");
    html += `<h3>#${i + 1}${label}</h3><p>${flags}</p><pre>${escape(e.table)}</pre>`;
  });
  $("output").innerHTML = html;
}

await init();
$("draw").addEventListener("click", guarded(drawDiagram));
$("below").addEventListener("click", guarded(showTotallyBelow));
$("enumerate").addEventListener("click", guarded(showEnumeration));
guarded(drawDiagram)();
