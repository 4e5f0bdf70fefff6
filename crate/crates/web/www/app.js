import init, { trace, curve, compare, curve_limit } from "./pkg/reluctant_web.js";

const $ = (id) => document.getElementById(id);

function fail(el, err) {
  el.innerHTML = "";
  const span = document.createElement("span");
  span.className = "error";
  span.textContent = String(err && err.message ? err.message : err);
  el.appendChild(span);
}

function formatCounters(c) {
  return `comparisons ${c.comparisons}  swaps ${c.swaps}  invocations ${c.invocations}  shuffles ${c.shuffles}`;
}

// ---------------------------------------------------------------- trace panel

const animation = { doc: null, array: [], step: 0, timer: null };

function drawBars(array, highlight) {
  const canvas = $("trace-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (array.length === 0) return;
  const lo = Math.min(0, ...array);
  const hi = Math.max(1, ...array);
  const span = hi - lo || 1;
  const w = canvas.width / array.length;
  const zero = canvas.height - ((0 - lo) / span) * (canvas.height - 10) - 5;
  array.forEach((v, i) => {
    const y = canvas.height - ((v - lo) / span) * (canvas.height - 10) - 5;
    ctx.fillStyle = highlight && highlight.includes(i) ? "#d9480f" : "#4263eb";
    ctx.fillRect(i * w + 1, Math.min(y, zero), Math.max(1, w - 2), Math.max(1, Math.abs(zero - y)));
  });
}

function showStep() {
  const { doc, array, step } = animation;
  const events = doc.events;
  let highlight = null;
  if (step > 0) {
    const e = events[step - 1];
    highlight = [e.left - 1, (e.right ?? e.left + 1) - 1];
  }
  drawBars(array, highlight);
  const note = doc.algorithm === "bogosort" ? "\n(bogosort shuffles are not recorded as swaps; showing input, then output)" : "";
  $("trace-stats").textContent =
    `swap ${step} / ${events.length}\n${formatCounters(doc.counters)}${note}`;
}

function advance() {
  const { doc, array } = animation;
  if (animation.step >= doc.events.length) {
    if (doc.algorithm === "bogosort" && doc.output) {
      animation.array = doc.output.slice();
      drawBars(animation.array, null);
    }
    stopAnimation();
    return false;
  }
  const e = doc.events[animation.step];
  const i = e.left - 1;
  const j = (e.right ?? e.left + 1) - 1;
  [array[i], array[j]] = [array[j], array[i]];
  animation.step += 1;
  showStep();
  return true;
}

function stopAnimation() {
  if (animation.timer !== null) clearInterval(animation.timer);
  animation.timer = null;
}

function runTrace() {
  stopAnimation();
  try {
    const seed = Math.max(0, Number($("trace-seed").value) | 0);
    const doc = JSON.parse(trace($("trace-alg").value, $("trace-input").value, seed));
    animation.doc = doc;
    animation.array = doc.input.slice();
    animation.step = 0;
    $("trace-step").disabled = false;
    showStep();
    if ($("trace-auto").checked) {
      // Aim for roughly six seconds regardless of trace length.
      const delay = Math.max(4, Math.min(300, 6000 / Math.max(1, doc.events.length)));
      animation.timer = setInterval(advance, delay);
      if (doc.events.length === 0) advance();
    }
  } catch (err) {
    $("trace-step").disabled = true;
    drawBars([], null);
    fail($("trace-stats"), err);
  }
}

// ---------------------------------------------------------------- curve panel

function plotCurve(data) {
  const canvas = $("curve-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const pts = data.points.filter((p) => p.comparisons > 0);
  if (pts.length === 0) return;
  const pad = { l: 60, r: 15, t: 15, b: 30 };
  const xs = pts.map((p) => p.n);
  const ys = pts.map((p) => Math.log10(p.comparisons)).concat(data.fitted.map(([, v]) => Math.log10(v)));
  const [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  const [y0, y1] = [Math.floor(Math.min(...ys)), Math.ceil(Math.max(...ys)) || 1];
  const sx = (n) => pad.l + ((n - x0) / (x1 - x0 || 1)) * (canvas.width - pad.l - pad.r);
  const sy = (v) => canvas.height - pad.b - ((v - y0) / (y1 - y0 || 1)) * (canvas.height - pad.t - pad.b);

  ctx.strokeStyle = "#ccc";
  ctx.fillStyle = "#555";
  ctx.font = "12px system-ui";
  for (let d = y0; d <= y1; d++) {
    ctx.beginPath();
    ctx.moveTo(pad.l, sy(d));
    ctx.lineTo(canvas.width - pad.r, sy(d));
    ctx.stroke();
    ctx.fillText(`1e${d}`, 8, sy(d) + 4);
  }
  ctx.fillText(`n = ${x0}`, pad.l, canvas.height - 8);
  ctx.fillText(`n = ${x1}`, canvas.width - pad.r - 50, canvas.height - 8);

  ctx.fillStyle = "#4263eb";
  for (const p of pts) {
    ctx.beginPath();
    ctx.arc(sx(p.n), sy(Math.log10(p.comparisons)), 3, 0, 2 * Math.PI);
    ctx.fill();
  }
  if (data.fitted.length > 1) {
    ctx.strokeStyle = "#d9480f";
    ctx.lineWidth = 2;
    ctx.beginPath();
    data.fitted.forEach(([n, v], i) => {
      const f = i === 0 ? "moveTo" : "lineTo";
      ctx[f](sx(n), sy(Math.log10(v)));
    });
    ctx.stroke();
    ctx.lineWidth = 1;
  }
}

function runCurve() {
  try {
    const alg = $("curve-alg").value;
    const limit = curve_limit(alg);
    const max = $("curve-max");
    if (Number(max.value) > limit) max.value = limit;
    const data = JSON.parse(
      curve(alg, $("curve-case").value, Number($("curve-min").value) | 0, Number(max.value) | 0,
        Math.max(0, Number($("curve-seed").value) | 0)),
    );
    plotCurve(data);
    const last = data.points[data.points.length - 1];
    let text = last ? `n = ${last.n}: ${formatCounters(last)}` : "no points";
    if (data.fit) {
      const sel = data.fit.models[data.fit.selected];
      text += `\nselected model: ${data.fit.selected} (slope ${sel.slope.toFixed(3)}, rss ${sel.rss.toExponential(2)})`;
    } else {
      text += "\ntoo few usable points for a fit";
    }
    text += `\nlimit for ${alg}: n ≤ ${limit}  (dots: comparisons, line: fitted model)`;
    $("curve-stats").textContent = text;
  } catch (err) {
    fail($("curve-stats"), err);
  }
}

// -------------------------------------------------------------- compare panel

function runCompare() {
  const out = $("compare-out");
  try {
    const data = JSON.parse(compare($("compare-input").value));
    const table = document.createElement("table");
    const head = table.insertRow();
    for (const h of ["algorithm", "comparisons", "swaps", "invocations", "swap positions"]) {
      const th = document.createElement("th");
      th.textContent = h;
      head.appendChild(th);
    }
    for (const run of data.runs) {
      const row = table.insertRow();
      const c = run.counters;
      const positions = run.lefts.length > 40 ? run.lefts.slice(0, 40).join(" ") + " …" : run.lefts.join(" ");
      for (const v of [run.algorithm, c.comparisons, c.swaps, c.invocations, positions]) {
        row.insertCell().textContent = v;
      }
    }
    const summary = document.createElement("p");
    summary.textContent = `output [${data.output.join(", ")}] — swap sequences ${data.same_swaps ? "identical" : "DIFFER"}`;
    out.replaceChildren(summary, table);
  } catch (err) {
    fail(out, err);
  }
}

await init();
$("trace-run").addEventListener("click", runTrace);
$("trace-step").addEventListener("click", () => {
  stopAnimation();
  if (animation.doc) advance();
});
$("curve-run").addEventListener("click", runCurve);
$("compare-run").addEventListener("click", runCompare);
runTrace();
runCurve();
runCompare();
