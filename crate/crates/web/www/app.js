import init, { describe, apply, spheres } from "./pkg/lamplighter_web.js";

const LEFT = -10;
const RIGHT = 10;

let bulbs = new Set();
let cursor = 0;
let view = null;
let timer = null;

const $ = (id) => document.getElementById(id);

function literal() {
  return bulbs.size ? [...bulbs].sort((x, y) => x - y).join(",") : "none";
}

function drawStreet(lit, at) {
  const street = $("street");
  street.replaceChildren();
  for (let p = LEFT; p <= RIGHT; p++) {
    const slot = document.createElement("div");
    slot.className = "slot" + (lit.has(p) ? " lit" : "") + (p === at ? " cursor" : "");
    const bulb = document.createElement("div");
    bulb.className = "bulb";
    bulb.onclick = () => {
      stop();
      bulbs.has(p) ? bulbs.delete(p) : bulbs.add(p);
      refresh();
    };
    const label = document.createElement("div");
    label.className = "pos";
    label.textContent = p;
    label.onclick = () => {
      stop();
      cursor = p;
      refresh();
    };
    slot.append(bulb, label);
    street.append(slot);
  }
}

function row(name, f) {
  const tr = document.createElement("tr");
  const th = document.createElement("th");
  th.textContent = name;
  tr.append(th);
  for (const gs of ["wreath", "automata"]) {
    const td = document.createElement("td");
    td.innerHTML = f(view[gs]);
    tr.append(td);
  }
  return tr;
}

function deadEnd(d) {
  if (!d.is_dead_end) return "no";
  if (d.depth === undefined) return "yes";
  return `yes, depth ${d.depth}`;
}

function refresh() {
  $("error").textContent = "";
  try {
    view = JSON.parse(describe(literal(), cursor));
  } catch (e) {
    $("error").textContent = e;
    return;
  }
  drawStreet(bulbs, cursor);
  $("literal").textContent = view.element;
  const body = $("lengths");
  body.replaceChildren(
    row("length", (v) => `${v.length.value} <small>(${v.length.branch})</small>`),
    row("geodesic", (v) => `<code>${v.power_notation}</code>`),
    row("geodesics", (v) => (v.geodesics ? `${v.geodesics.count}` : "too long to count")),
    row("dead end", (v) => deadEnd(v.dead_end)),
  );
}

function stop() {
  if (timer !== null) {
    clearInterval(timer);
    timer = null;
  }
}

function play(gs) {
  stop();
  const states = view[gs].states;
  let i = 0;
  timer = setInterval(() => {
    const s = states[i];
    drawStreet(new Set(s.bulbs), s.cursor);
    if (++i === states.length) stop();
  }, 250);
}

function drawChart(data) {
  const canvas = $("chart");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const n = data.automata.length;
  const max = Math.log10(Math.max(...data.automata, ...data.wreath));
  const x = (i) => 40 + (i * (canvas.width - 60)) / Math.max(n - 1, 1);
  const y = (v) => canvas.height - 20 - (Math.log10(v) / (max || 1)) * (canvas.height - 40);
  ctx.fillStyle = "#777";
  ctx.fillText("log scale", 4, 12);
  for (const [gs, colour] of [["wreath", "#1f77b4"], ["automata", "#d62728"]]) {
    ctx.strokeStyle = colour;
    ctx.fillStyle = colour;
    ctx.beginPath();
    data[gs].forEach((v, i) => (i ? ctx.lineTo(x(i), y(v)) : ctx.moveTo(x(i), y(v))));
    ctx.stroke();
    ctx.fillText(gs === "wreath" ? "{a, t}" : "{t, ta}", x(n - 1) - 40, y(data[gs][n - 1]) - 6);
  }
  const rows = data.automata
    .map((v, i) => `<tr><td>${i}</td><td>${data.wreath[i]}</td><td>${v}</td></tr>`)
    .join("");
  $("sphere-table").innerHTML =
    `<table><thead><tr><th>radius</th><th>{a, t}</th><th>{t, ta}</th></tr></thead><tbody>${rows}</tbody></table>`;
}

function grow() {
  $("error").textContent = "";
  try {
    drawChart(JSON.parse(spheres(Number($("radius").value))));
  } catch (e) {
    $("error").textContent = e;
  }
}

await init();

for (const button of document.querySelectorAll("button[data-letter]")) {
  button.onclick = () => {
    stop();
    const next = JSON.parse(apply(literal(), cursor, button.dataset.letter));
    bulbs = new Set(next.state.bulbs);
    cursor = next.state.cursor;
    refresh();
  };
}
$("reset").onclick = () => {
  stop();
  bulbs = new Set();
  cursor = 0;
  refresh();
};
$("play-wreath").onclick = () => play("wreath");
$("play-automata").onclick = () => play("automata");
$("grow").onclick = grow;

refresh();
grow();
