// Built by `wasm-pack build crates/web --target web --out-dir www/pkg`.
import init, { analyze, render, continuedFraction } from "./pkg/harmonic_web.js";

const $ = (id) => document.getElementById(id);

function showError(el, err) {
  el.textContent = String(err.message ?? err);
  el.hidden = false;
}

function fillList(dl, rows) {
  dl.replaceChildren();
  for (const [k, v] of rows) {
    if (v === null || v === undefined || v === "") continue;
    const dt = document.createElement("dt");
    dt.textContent = k;
    const dd = document.createElement("dd");
    dd.textContent = v;
    dl.append(dt, dd);
  }
}

function runKnot() {
  const [a, b, c] = ["a", "b", "c"].map((id) => Number($(id).value));
  const signs = $("signs").checked;
  $("knot-error").hidden = true;
  try {
    const r = JSON.parse(analyze(a, b, c));
    fillList($("summary"), [
      ["crossings in the diagram", r.diagram_crossings],
      ["Conway form", r.conway && `C(${r.conway.join(", ")})`],
      ["Schubert fraction", r.fraction_text ?? "unknown"],
      ["crossing number", r.crossing_number ?? "unknown"],
      ["Alexander polynomial", r.alexander_text],
      ["determinant", r.determinant],
      ["name", r.name ?? "unidentified"],
      ["notes", r.notes.join("; ")],
    ]);
    $("xy").innerHTML = render(a, b, c, false, signs);
    $("billiard").innerHTML = render(a, b, c, true, signs);
    $("json").textContent = JSON.stringify(r, null, 2);
    $("knot-output").hidden = false;
    history.replaceState(null, "", `#${a},${b},${c}`);
  } catch (err) {
    $("knot-output").hidden = true;
    showError($("knot-error"), err);
  }
}

function runCf() {
  const alpha = Number($("alpha").value);
  const beta = Number($("beta").value);
  $("cf-error").hidden = true;
  try {
    const r = JSON.parse(continuedFraction(alpha, beta));
    const rows = [
      ["positive expansion", `[${r.positive_cf.join(", ")}]`],
      ["crossing number", r.crossing_number],
      ["β² mod α", `${r.beta_squared_mod_alpha}${r.beta_squared_pm2 ? " (≡ ±2)" : ""}`],
    ];
    for (const rep of r.even_representatives) {
      const f = `${rep.fraction.alpha}/${rep.fraction.beta}`;
      const flag = rep.profile.max_run >= 2 ? ", two consecutive sign changes" : "";
      rows.push([f, `[${rep.expansion.join(", ")}]${flag}`]);
    }
    fillList($("cf-output"), rows);
    $("cf-output").hidden = false;
  } catch (err) {
    $("cf-output").hidden = true;
    showError($("cf-error"), err);
  }
}

function fromHash() {
  const m = location.hash.match(/^#(\d+),(\d+),(\d+)$/);
  if (!m) return false;
  [$("a").value, $("b").value, $("c").value] = m.slice(1);
  return true;
}

await init();
$("knot-form").addEventListener("submit", (e) => { e.preventDefault(); runKnot(); });
$("cf-form").addEventListener("submit", (e) => { e.preventDefault(); runCf(); });
$("signs").addEventListener("change", runKnot);
window.addEventListener("hashchange", () => { if (fromHash()) runKnot(); });
fromHash();
runKnot();
runCf();
