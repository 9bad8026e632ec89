import init, { runConvergence, replacementCurve, distanceSample, attractiveness } from './pkg/famv_web.js';

const PROBLEMS = ['sphere', 'elliptic', 'rosenbrock', 'rastrigin', 'ackley', 'griewank', 'schwefel', 'vessel', 'beam', 'csd'];
const ALGORITHMS = ['fa', 'famv-h', 'famv-h-adaptive', 'famv-g', 'famv-g-adaptive',
  'famv-h-alpha', 'famv-h-gamma', 'famv-g-alpha', 'famv-g-gamma', 'ga'];
const DEFAULT_ON = new Set(['fa', 'famv-h', 'famv-g-adaptive', 'ga']);
const COLORS = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e', '#8c564b', '#e377c2', '#7f7f7f', '#bcbd22', '#17becf'];

const $ = (id) => document.getElementById(id);

function fillSelect(sel) {
  for (const p of PROBLEMS) sel.add(new Option(p, p));
}

// Axes in data space; `ylog` plots log10 of y.
function plot(canvas, series, { xmax, ymin, ymax, ylog = false, xlabel = '', ylabel = '' }) {
  const ctx = canvas.getContext('2d');
  const W = canvas.width, H = canvas.height, L = 60, R = 10, T = 10, B = 30;
  ctx.clearRect(0, 0, W, H);
  const ty = (y) => (ylog ? Math.log10(Math.max(y, 1e-300)) : y);
  const [y0, y1] = [ty(ymin), ty(ymax)];
  const sx = (x) => L + (x / xmax) * (W - L - R);
  const sy = (y) => T + (1 - (ty(y) - y0) / (y1 - y0 || 1)) * (H - T - B);

  ctx.strokeStyle = '#999';
  ctx.strokeRect(L, T, W - L - R, H - T - B);
  ctx.fillStyle = '#444';
  ctx.font = '11px sans-serif';
  ctx.fillText(xlabel, W / 2, H - 5);
  ctx.fillText(ylabel, 5, T + 10);
  for (let i = 0; i <= 4; i++) {
    const v = y0 + (i / 4) * (y1 - y0);
    const label = ylog ? `1e${v.toFixed(1)}` : v.toFixed(2);
    ctx.fillText(label, 5, sy(ylog ? 10 ** v : v) + 4);
    const xv = (i / 4) * xmax;
    ctx.fillText(xv.toPrecision(3), sx(xv) - 10, H - B + 14);
  }
  for (const s of series) {
    ctx.strokeStyle = s.color;
    ctx.setLineDash(s.dash || []);
    ctx.beginPath();
    s.x.forEach((x, i) => (i ? ctx.lineTo(sx(x), sy(s.y[i])) : ctx.moveTo(sx(x), sy(s.y[i]))));
    ctx.stroke();
  }
  ctx.setLineDash([]);
}

function convergence() {
  const algos = ALGORITHMS.filter((a) => $(`algo-${a}`).checked);
  const status = $('conv-status');
  status.textContent = 'running...';
  status.className = '';
  // let the status paint before the synchronous run
  setTimeout(() => {
    try {
      const t0 = performance.now();
      const curves = runConvergence($('conv-problem').value, algos.join(','), +$('conv-dim').value,
        +$('conv-budget').value, +$('conv-seed').value);
      const series = [];
      for (let i = 0; i < curves.len(); i++) {
        series.push({ name: curves.name(i), x: curves.fe(i), y: curves.ae(i), color: COLORS[ALGORITHMS.indexOf(curves.name(i))] });
      }
      curves.free();
      const ys = series.flatMap((s) => Array.from(s.y)).filter((y) => y > 0);
      plot($('conv-canvas'), series, {
        xmax: +$('conv-budget').value, ymin: Math.min(...ys), ymax: Math.max(...ys), ylog: true,
        xlabel: 'evaluations', ylabel: 'best AE',
      });
      $('conv-legend').innerHTML = series
        .map((s) => `<span style="color:${s.color}">${s.name}: ${s.y[s.y.length - 1].toExponential(2)}</span>`).join('');
      status.textContent = `${((performance.now() - t0) / 1000).toFixed(1)} s`;
    } catch (e) {
      status.textContent = e.message ?? String(e);
      status.className = 'err';
    }
  }, 10);
}

function sigmoid() {
  const k = +$('sig-k').value;
  const a0 = +$('sig-alpha').value;
  $('sig-k-val').textContent = k;
  const series = [true, false].map((adaptive, i) => {
    const c = replacementCurve(a0, 2 * a0, k, adaptive, 200);
    return { x: c.filter((_, j) => j % 2 === 0), y: c.filter((_, j) => j % 2 === 1), color: COLORS[i ? 1 : 0] };
  });
  plot($('sig-canvas'), series, { xmax: 2 * a0, ymin: 0, ymax: 1, xlabel: 'alpha', ylabel: 'p' });
}

function median(v) {
  const s = Array.from(v).sort((a, b) => a - b);
  return s[Math.floor(s.length / 2)];
}

function distances() {
  const pairs = 500;
  const gamma = +$('dist-gamma').value;
  try {
    const d = distanceSample($('dist-problem').value, +$('dist-dim').value, pairs, 1);
    const rh = median(d.subarray(0, pairs));
    const rg = median(d.subarray(pairs));
    const xmax = Math.max(rh, rg, 1) * 1.2;
    const xs = Array.from({ length: 200 }, (_, i) => (i / 199) * xmax);
    const curve = { x: xs, y: xs.map((r) => attractiveness(gamma, r)), color: '#444' };
    const mark = (r, color) => ({ x: [r, r], y: [0, 1.5], color, dash: [4, 3] });
    plot($('dist-canvas'), [curve, mark(rh, COLORS[0]), mark(rg, COLORS[3])],
      { xmax, ymin: 0, ymax: 1.5, xlabel: 'r', ylabel: 'beta' });
    $('dist-legend').innerHTML =
      `<span style="color:${COLORS[0]}">median Euclidean-Hamming r = ${rh.toFixed(3)}, beta = ${attractiveness(gamma, rh).toExponential(2)}</span>` +
      `<span style="color:${COLORS[3]}">median Gower r = ${rg.toFixed(3)}, beta = ${attractiveness(gamma, rg).toFixed(3)}</span>`;
  } catch (e) {
    $('dist-legend').textContent = e.message ?? String(e);
  }
}

await init();
fillSelect($('conv-problem'));
fillSelect($('dist-problem'));
$('conv-algos').innerHTML = ALGORITHMS.map((a, i) =>
  `<label style="color:${COLORS[i]}"><input type="checkbox" id="algo-${a}" ${DEFAULT_ON.has(a) ? 'checked' : ''}>${a}</label>`).join('');
$('conv-run').onclick = convergence;
for (const id of ['sig-k', 'sig-alpha']) $(id).oninput = sigmoid;
for (const id of ['dist-problem', 'dist-dim', 'dist-gamma']) $(id).oninput = distances;
sigmoid();
distances();
