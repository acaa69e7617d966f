/** Radial layout for forests: each component gets a horizontal band, its
 * tree is rooted at a center vertex and drawn on concentric rings with
 * angular sectors proportional to leaf counts.  Pure geometry, no DOM. */

export interface Point {
  x: number;
  y: number;
}

function components(n: number, adj: Set<number>[]): number[][] {
  const seen = new Array(n).fill(false);
  const out: number[][] = [];
  for (let root = 0; root < n; root++) {
    if (seen[root]) continue;
    const comp = [root];
    seen[root] = true;
    const stack = [root];
    while (stack.length) {
      const x = stack.pop()!;
      for (const y of adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          comp.push(y);
          stack.push(y);
        }
      }
    }
    out.push(comp.sort((a, b) => a - b));
  }
  return out;
}

function centerOf(comp: number[], adj: Set<number>[]): number {
  // peel leaves inward; the survivor (or lower of the last two) is central
  if (comp.length === 1) return comp[0];
  const degree = new Map<number, number>();
  const inComp = new Set(comp);
  for (const v of comp) {
    let d = 0;
    for (const w of adj[v]) if (inComp.has(w)) d++;
    degree.set(v, d);
  }
  let remaining = comp.length;
  let layer = comp.filter((v) => degree.get(v) === 1);
  const dead = new Set<number>();
  while (remaining - layer.length >= 1 && layer.length > 0) {
    const next: number[] = [];
    for (const v of layer) {
      dead.add(v);
      for (const w of adj[v]) {
        if (!inComp.has(w) || dead.has(w)) continue;
        const d = degree.get(w)! - 1;
        degree.set(w, d);
        if (d === 1) next.push(w);
      }
    }
    remaining -= layer.length;
    if (next.length === 0) break;
    layer = next;
  }
  const alive = comp.filter((v) => !dead.has(v));
  return alive.length ? Math.min(...alive) : comp[0];
}

function leafWeight(
  v: number,
  parent: number,
  adj: Set<number>[],
  memo: Map<number, number>,
): number {
  const kids = [...adj[v]].filter((w) => w !== parent);
  if (kids.length === 0) return 1;
  let total = 0;
  for (const w of kids) total += leafWeight(w, v, adj, memo);
  return total;
}

/** Positions for all n vertices inside a width x height viewport. */
export function layoutForest(
  n: number,
  edges: [number, number][],
  width: number,
  height: number,
): Point[] {
  const adj: Set<number>[] = Array.from({ length: n }, () => new Set());
  for (const [u, v] of edges) {
    adj[u].add(v);
    adj[v].add(u);
  }
  const pos: Point[] = Array.from({ length: n }, () => ({ x: 0, y: 0 }));
  if (n === 0) return pos;
  const comps = components(n, adj);
  // band widths proportional to component size
  const total = comps.reduce((acc, c) => acc + c.length, 0);
  let xCursor = 0;
  for (const comp of comps) {
    const bandW = (comp.length / total) * width;
    const cx = xCursor + bandW / 2;
    const cy = height / 2;
    xCursor += bandW;
    const root = centerOf(comp, adj);
    // depth via BFS
    const depth = new Map<number, number>([[root, 0]]);
    const order = [root];
    for (let i = 0; i < order.length; i++) {
      const x = order[i];
      for (const y of adj[x]) {
        if (!depth.has(y)) {
          depth.set(y, depth.get(x)! + 1);
          order.push(y);
        }
      }
    }
    const maxDepth = Math.max(...[...depth.values()], 1);
    const ringGap = Math.min(bandW, height) / 2 / (maxDepth + 1);

    const place = (
      v: number,
      parent: number,
      a0: number,
      a1: number,
    ): void => {
      const d = depth.get(v)!;
      const angle = (a0 + a1) / 2;
      pos[v] = {
        x: cx + ringGap * d * Math.cos(angle),
        y: cy + ringGap * d * Math.sin(angle),
      };
      const kids = [...adj[v]].filter((w) => w !== parent).sort((a, b) => a - b);
      if (!kids.length) return;
      const weights = kids.map((w) => leafWeight(w, v, adj, new Map()));
      const sum = weights.reduce((a, b) => a + b, 0);
      let angleCursor = a0;
      kids.forEach((w, i) => {
        const span = ((a1 - a0) * weights[i]) / sum;
        place(w, v, angleCursor, angleCursor + span);
        angleCursor += span;
      });
    };
    place(root, -1, 0, 2 * Math.PI);
  }
  return pos;
}
