/** Rotatable 3D scatter of a product cloud, with reference markers. */

import * as THREE from "three";
import { OrbitControls } from "three/examples/jsm/controls/OrbitControls.js";

import { colorize, coordLabel, projectOne, projectPoints } from "./projection";
import { ProjectionSpec } from "./state";
import { MarkerName, PointCloudDoc } from "./types";

const MARKER_COLORS: Record<MarkerName, number> = {
  exp_of_sum: 0xd62728,
  ordered_product: 0x2ca02c,
  reversed_product: 0x9467bd,
  standard_word: 0xff7f0e,
};

export const MARKER_LABELS: Record<MarkerName, string> = {
  exp_of_sum: "e^{A+B+...}",
  ordered_product: "e^A e^B ...",
  reversed_product: "... e^B e^A",
  standard_word: "alternating word",
};

function markerGeometry(name: MarkerName, size: number): THREE.BufferGeometry {
  switch (name) {
    case "exp_of_sum":
      return new THREE.SphereGeometry(size, 16, 16);
    case "ordered_product":
      return new THREE.BoxGeometry(size * 1.6, size * 1.6, size * 1.6);
    case "reversed_product":
      return new THREE.ConeGeometry(size, size * 2, 12);
    case "standard_word":
      return new THREE.OctahedronGeometry(size * 1.2);
  }
}

export class CloudView {
  private renderer: THREE.WebGLRenderer;
  private scene = new THREE.Scene();
  private camera: THREE.PerspectiveCamera;
  private controls: OrbitControls;
  private points: THREE.Points | null = null;
  private markerGroup = new THREE.Group();
  private raycaster = new THREE.Raycaster();
  private pointer = new THREE.Vector2();
  private words: string[] = [];
  private tooltip: HTMLDivElement;
  private disposed = false;

  constructor(private container: HTMLElement) {
    this.renderer = new THREE.WebGLRenderer({ antialias: true, preserveDrawingBuffer: true });
    this.renderer.setSize(container.clientWidth, container.clientHeight);
    this.renderer.setClearColor(0x10141c);
    container.appendChild(this.renderer.domElement);

    this.camera = new THREE.PerspectiveCamera(
      55,
      container.clientWidth / Math.max(container.clientHeight, 1),
      0.001,
      100,
    );
    this.camera.position.set(1.8, 1.4, 2.2);
    this.controls = new OrbitControls(this.camera, this.renderer.domElement);
    this.controls.enableDamping = true;

    this.scene.add(new THREE.AmbientLight(0xffffff, 0.9));
    const light = new THREE.DirectionalLight(0xffffff, 0.8);
    light.position.set(3, 4, 5);
    this.scene.add(light);
    this.scene.add(this.markerGroup);
    this.scene.add(new THREE.AxesHelper(1));

    this.tooltip = document.createElement("div");
    this.tooltip.className = "cloud-tooltip";
    this.tooltip.style.display = "none";
    container.appendChild(this.tooltip);
    this.renderer.domElement.addEventListener("pointermove", this.onPointerMove);

    window.addEventListener("resize", this.onResize);
    this.animate();
  }

  setData(doc: PointCloudDoc, projection: ProjectionSpec): void {
    if (this.points) {
      this.scene.remove(this.points);
      this.points.geometry.dispose();
      (this.points.material as THREE.Material).dispose();
      this.points = null;
    }
    this.markerGroup.clear();
    this.words = doc.points.map((p) => p.word);

    const { positions, colorValues } = projectPoints(doc.points, projection, doc.dim);
    const colors = colorize(colorValues);
    const geometry = new THREE.BufferGeometry();
    geometry.setAttribute("position", new THREE.BufferAttribute(positions, 3));
    geometry.setAttribute("color", new THREE.BufferAttribute(colors, 3));
    const material = new THREE.PointsMaterial({ size: 0.015, vertexColors: true });
    this.points = new THREE.Points(geometry, material);
    this.scene.add(this.points);

    geometry.computeBoundingSphere();
    const sphere = geometry.boundingSphere;
    const radius = sphere && sphere.radius > 0 ? sphere.radius : 1;
    const center = sphere ? sphere.center : new THREE.Vector3();
    for (const name of Object.keys(doc.markers) as MarkerName[]) {
      const [x, y, z] = projectOne(doc.markers[name], projection, doc.dim);
      const mesh = new THREE.Mesh(
        markerGeometry(name, radius * 0.035),
        new THREE.MeshStandardMaterial({ color: MARKER_COLORS[name] }),
      );
      mesh.position.set(x, y, z);
      this.markerGroup.add(mesh);
    }
    this.controls.target.copy(center);
    const distance = Math.max(radius * 2.8, 0.2);
    this.camera.position
      .copy(center)
      .add(new THREE.Vector3(distance, distance * 0.75, distance * 1.1));
    this.camera.near = radius / 1000;
    this.camera.far = radius * 100 + 10;
    this.camera.updateProjectionMatrix();
  }

  axisCaption(projection: ProjectionSpec): string {
    return (
      `x=${coordLabel(projection.x)}  y=${coordLabel(projection.y)}  ` +
      `z=${coordLabel(projection.z)}  color=${coordLabel(projection.color)}`
    );
  }

  snapshotPng(): string {
    this.renderer.render(this.scene, this.camera);
    return this.renderer.domElement.toDataURL("image/png");
  }

  private onPointerMove = (event: PointerEvent) => {
    if (!this.points) return;
    const rect = this.renderer.domElement.getBoundingClientRect();
    this.pointer.x = ((event.clientX - rect.left) / rect.width) * 2 - 1;
    this.pointer.y = -((event.clientY - rect.top) / rect.height) * 2 + 1;
    this.raycaster.params.Points = { threshold: 0.01 };
    this.raycaster.setFromCamera(this.pointer, this.camera);
    const hits = this.raycaster.intersectObject(this.points, false);
    if (hits.length > 0 && hits[0].index !== undefined) {
      this.tooltip.textContent = this.words[hits[0].index];
      this.tooltip.style.display = "block";
      this.tooltip.style.left = `${event.clientX - rect.left + 12}px`;
      this.tooltip.style.top = `${event.clientY - rect.top + 12}px`;
    } else {
      this.tooltip.style.display = "none";
    }
  };

  private onResize = () => {
    const width = this.container.clientWidth;
    const height = Math.max(this.container.clientHeight, 1);
    this.renderer.setSize(width, height);
    this.camera.aspect = width / height;
    this.camera.updateProjectionMatrix();
  };

  private animate = () => {
    if (this.disposed) return;
    requestAnimationFrame(this.animate);
    this.controls.update();
    this.renderer.render(this.scene, this.camera);
  };

  dispose(): void {
    this.disposed = true;
    window.removeEventListener("resize", this.onResize);
    this.renderer.domElement.removeEventListener("pointermove", this.onPointerMove);
    this.renderer.dispose();
  }
}
