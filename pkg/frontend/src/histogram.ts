/** Canvas histogram of distances with the threshold line. */

import { ConcentrationDoc } from "./types";

export class HistogramView {
  private context: CanvasRenderingContext2D;

  constructor(private canvas: HTMLCanvasElement) {
    const context = canvas.getContext("2d");
    if (!context) throw new Error("2d canvas context unavailable");
    this.context = context;
  }

  render(doc: ConcentrationDoc): void {
    const { edges, counts } = doc.histogram;
    const ctx = this.context;
    const width = this.canvas.width;
    const height = this.canvas.height;
    const padLeft = 10;
    const padBottom = 22;
    const plotWidth = width - 2 * padLeft;
    const plotHeight = height - padBottom - 8;

    ctx.clearRect(0, 0, width, height);
    ctx.fillStyle = "#10141c";
    ctx.fillRect(0, 0, width, height);

    const top = Math.max(...counts, 1);
    const span = edges[edges.length - 1] - edges[0] || 1;
    ctx.fillStyle = "#4d9fda";
    counts.forEach((count, i) => {
      const x0 = padLeft + ((edges[i] - edges[0]) / span) * plotWidth;
      const x1 = padLeft + ((edges[i + 1] - edges[0]) / span) * plotWidth;
      const barHeight = (count / top) * plotHeight;
      ctx.fillRect(x0 + 0.5, 8 + plotHeight - barHeight, Math.max(x1 - x0 - 1, 1), barHeight);
    });

    // threshold line, clamped into view
    const fraction = Math.min(Math.max((doc.threshold - edges[0]) / span, 0), 1);
    const lineX = padLeft + fraction * plotWidth;
    ctx.strokeStyle = "#d62728";
    ctx.lineWidth = 2;
    ctx.beginPath();
    ctx.moveTo(lineX, 4);
    ctx.lineTo(lineX, 8 + plotHeight);
    ctx.stroke();

    ctx.fillStyle = "#c9d4e3";
    ctx.font = "11px system-ui, sans-serif";
    ctx.fillText(edges[0].toPrecision(2), padLeft, height - 8);
    const last = edges[edges.length - 1].toPrecision(3);
    ctx.fillText(last, width - padLeft - ctx.measureText(last).width, height - 8);
    ctx.fillStyle = "#d62728";
    ctx.fillText(`threshold ${doc.threshold.toPrecision(3)}`, Math.min(lineX + 6, width - 110), 14);
  }
}
