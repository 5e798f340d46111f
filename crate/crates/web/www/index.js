import init, { richardsonCurves, pOfGenus, quadrangulations } from "./pkg/crosscap_web.js";

const COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"];
const $ = (id) => document.getElementById(id);

function call(f, show) {
  try {
    show(JSON.parse(f()));
  } catch (e) {
    show(null, String(e));
  }
}

function drawCurves(data) {
  const canvas = $("chart");
  const ctx = canvas.getContext("2d");
  const W = canvas.width, H = canvas.height, pad = 48;
  ctx.clearRect(0, 0, W, H);

  let lo = Infinity, hi = -Infinity;
  for (const c of data.curves) {
    for (const y of c.log_error) {
      if (y !== null) { lo = Math.min(lo, y); hi = Math.max(hi, y); }
    }
  }
  lo = Math.floor(lo); hi = Math.ceil(hi);
  if (hi === lo) hi = lo + 1;
  const x = (m) => pad + (W - 2 * pad) * (m - 1) / Math.max(1, data.n - 1);
  const y = (v) => H - pad - (H - 2 * pad) * (v - lo) / (hi - lo);

  ctx.strokeStyle = "#999";
  ctx.fillStyle = "#444";
  ctx.font = "12px sans-serif";
  ctx.beginPath();
  ctx.moveTo(pad, pad); ctx.lineTo(pad, H - pad); ctx.lineTo(W - pad, H - pad);
  ctx.stroke();
  const step = Math.max(1, Math.ceil((hi - lo) / 10));
  for (let v = lo; v <= hi; v += step) {
    ctx.fillText(`1e${v}`, 4, y(v) + 4);
  }
  for (const m of [1, Math.round(data.n / 2), data.n]) {
    ctx.fillText(String(m), x(m) - 8, H - pad + 16);
  }
  ctx.fillText("n", W - pad + 8, H - pad + 4);
  ctx.fillText("|transform − limit|", pad + 6, pad - 8);

  data.curves.forEach((c, i) => {
    ctx.strokeStyle = COLORS[i % COLORS.length];
    ctx.beginPath();
    let pen = false;
    c.log_error.forEach((v, j) => {
      if (v === null) { pen = false; return; }
      const px = x(j + 1), py = y(v);
      pen ? ctx.lineTo(px, py) : ctx.moveTo(px, py);
      pen = true;
    });
    ctx.stroke();
  });

  $("legend").innerHTML = data.curves
    .map((c, i) => `<span style="color:${COLORS[i % COLORS.length]}">N = ${c.order}</span>`)
    .join("");
  $("summary").textContent =
    `limit ${data.limit}  (precision ${data.precision} digits)\n` +
    data.curves
      .map((c) => `N = ${String(c.order).padStart(2)}  ${c.last}  matched ${c.matched_digits} digits, ${c.guard_digits} guard`)
      .join("\n");
}

function plot() {
  const orders = $("orders").value.split(",").map((s) => parseInt(s.trim(), 10)).filter((v) => !Number.isNaN(v));
  const n = parseInt($("n").value, 10);
  const prec = parseInt($("prec").value, 10);
  call(
    () => richardsonCurves($("target").value, n, Uint32Array.from(orders), prec),
    (data, err) => {
      if (err) { $("summary").innerHTML = `<span class="error">${err}</span>`; return; }
      drawCurves(data);
    },
  );
}

function pg() {
  call(
    () => pOfGenus(parseInt($("twog").value, 10)),
    (d, err) => {
      $("pgout").textContent = err ?? `p_${d.g} = ${d.symbolic}` + (d.value ? `\n      ≈ ${d.value}` : "");
    },
  );
}

function quad() {
  call(
    () => quadrangulations(parseInt($("quadn").value, 10)),
    (d, err) => {
      $("quadout").textContent = err ?? d.map((c, i) => `c_${i + 1} = ${c}`).join("\n");
    },
  );
}

await init();
$("plot").addEventListener("click", plot);
$("pg").addEventListener("click", pg);
$("quad").addEventListener("click", quad);
plot();
pg();
quad();
