import {
  ApiErrorBody,
  ComponentRecord,
  GenerateResponse,
  RenderResponse,
  ValidateResponse,
} from './types.js';

export class ApiRequestError extends Error {
  constructor(
    public readonly status: number,
    public readonly body: ApiErrorBody,
  ) {
    super(`${body.code}: ${body.message}`);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const payload = await response.json();
  if (!response.ok) {
    throw new ApiRequestError(response.status, payload as ApiErrorBody);
  }
  return payload as T;
}

function post(body: unknown): RequestInit {
  return {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(body),
  };
}

export class ApiClient {
  constructor(private readonly baseUrl: string) {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  health(): Promise<{ status: string }> {
    return request(this.url('/api/health'));
  }

  render(dsl: string, mode: 'interface' | 'component' = 'interface'): Promise<RenderResponse> {
    return request(this.url('/api/render'), post({ dsl, mode }));
  }

  validate(dsl: string, mode: 'interface' | 'component' = 'interface'): Promise<ValidateResponse> {
    return request(this.url('/api/validate'), post({ dsl, mode }));
  }

  generateInterface(description: string, maxRepairs = 2): Promise<GenerateResponse> {
    return request(
      this.url('/api/generate/interface'),
      post({ description, max_repairs: maxRepairs }),
    );
  }

  generateComponent(description: string, maxRepairs = 2): Promise<GenerateResponse> {
    return request(
      this.url('/api/generate/component'),
      post({ description, max_repairs: maxRepairs }),
    );
  }

  listComponents(tag?: string): Promise<{ components: ComponentRecord[] }> {
    const query = tag ? `?tag=${encodeURIComponent(tag)}` : '';
    return request(this.url(`/api/components${query}`));
  }

  createComponent(record: {
    name: string;
    description?: string;
    dsl: string;
    tags?: string[];
  }): Promise<ComponentRecord> {
    return request(this.url('/api/components'), post(record));
  }

  getComponent(id: string): Promise<ComponentRecord> {
    return request(this.url(`/api/components/${id}`));
  }

  deleteComponent(id: string): Promise<{ acknowledged: boolean }> {
    return request(this.url(`/api/components/${id}`), { method: 'DELETE' });
  }
}
